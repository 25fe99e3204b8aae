#include "tmprod/sequences.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "tmprod/errors.hpp"

namespace tmprod {
namespace {

constexpr std::array<std::pair<ExponentKind, std::string_view>, 5> kKindNames{{
    {ExponentKind::PmThue, "pm-t"},
    {ExponentKind::ZeroOneThue, "t"},
    {ExponentKind::PmRS, "pm-v"},
    {ExponentKind::ZeroOneRS, "v"},
    {ExponentKind::Plain, "plain"},
}};

}  // namespace

std::string_view to_string(ExponentKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<ExponentKind> exponent_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

DigitWord parse_digit_word(std::string_view text, unsigned base) {
  if (base < 2 || base > 36) throw InputError("base must lie in [2, 36]");
  if (text.empty()) throw InputError("empty block word");
  DigitWord word;
  word.reserve(text.size());
  for (char c : text) {
    unsigned d;
    if (c >= '0' && c <= '9') {
      d = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'z') {
      d = static_cast<unsigned>(c - 'a') + 10;
    } else {
      throw InputError(std::string("invalid digit '") + c + "' in block word");
    }
    if (d >= base) {
      throw InputError(std::string("digit '") + c + "' is not a base-" +
                       std::to_string(base) + " digit");
    }
    word.push_back(d);
  }
  return word;
}

unsigned block_parity(std::span<const unsigned> word, unsigned base,
                      std::uint64_t n) {
  if (base < 2) throw InputError("base must be at least 2");
  if (word.empty()) throw InputError("empty block word");
  if (std::any_of(word.begin(), word.end(),
                  [base](unsigned d) { return d >= base; })) {
    throw InputError("block word has a digit outside the base");
  }
  // Digits are produced least significant first; compare against the word
  // reversed.
  std::array<unsigned, 64> digits{};
  std::size_t len = 0;
  for (std::uint64_t m = n; m != 0; m /= base) digits[len++] = m % base;
  if (word.size() > len) return 0;

  unsigned count = 0;
  const std::size_t w = word.size();
  for (std::size_t i = 0; i + w <= len; ++i) {
    bool match = true;
    for (std::size_t j = 0; j < w && match; ++j) {
      match = digits[i + j] == word[w - 1 - j];
    }
    count += match;
  }
  return count & 1;
}

std::int64_t prefix_signed_sum(ExponentKind kind, std::uint64_t count) {
  if (!is_plus_minus(kind)) {
    throw InputError("prefix_signed_sum needs a +-1 exponent kind, got " +
                     std::string(to_string(kind)));
  }
  std::int64_t sum = 0;
  for (std::uint64_t k = 0; k < count; ++k) sum += exponent(kind, k);
  return sum;
}

}  // namespace tmprod
