#pragma once

// Digit-counting sequences that supply the exponents of the products:
// Thue-Morse t_n, Rudin-Shapiro (Golay-Shapiro) v_n and the generic
// block-occurrence parity u_{w,b}(n).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tmprod {

enum class ExponentKind {
  PmThue,       ///< (-1)^{t_n}
  ZeroOneThue,  ///< t_n
  PmRS,         ///< (-1)^{v_n}
  ZeroOneRS,    ///< v_n
  Plain,        ///< 1
};

/// Short names used on the command line and in JSON: pm-t, t, pm-v, v, plain.
std::string_view to_string(ExponentKind kind);
std::optional<ExponentKind> exponent_kind_from_string(std::string_view name);

inline constexpr bool is_plus_minus(ExponentKind kind) {
  return kind == ExponentKind::PmThue || kind == ExponentKind::PmRS;
}

/// Parity of the number of 1-bits of n.
inline constexpr unsigned thue_morse(std::uint64_t n) {
  return static_cast<unsigned>(__builtin_popcountll(n) & 1);
}

/// Parity of the number of (overlapping) "11" blocks in the binary
/// expansion of n. Each adjacent pair of set bits is one block, so the
/// count is popcount(n & (n >> 1)).
inline constexpr unsigned rudin_shapiro(std::uint64_t n) {
  return static_cast<unsigned>(__builtin_popcountll(n & (n >> 1)) & 1);
}

/// A block of base-b digits, most significant first.
using DigitWord = std::vector<unsigned>;

/// Parses "11", "201", "a3" (digits 0-9 then a-z) into a DigitWord. Throws
/// InputError on an empty word, an unknown character or a digit >= base.
DigitWord parse_digit_word(std::string_view text, unsigned base);

/// Parity of the number of possibly overlapping occurrences of `word` in the
/// base-`base` expansion of n. Zero has the empty expansion, so
/// block_parity(w, b, 0) = 0 for every w. Throws InputError when the word is
/// empty, base < 2 or some digit of the word is >= base.
unsigned block_parity(std::span<const unsigned> word, unsigned base,
                      std::uint64_t n);

/// Uniform exponent access: PmThue -> (-1)^{t_n}, ZeroOneThue -> t_n,
/// PmRS -> (-1)^{v_n}, ZeroOneRS -> v_n, Plain -> 1.
inline constexpr int exponent(ExponentKind kind, std::uint64_t n) {
  switch (kind) {
    case ExponentKind::PmThue:
      return thue_morse(n) ? -1 : 1;
    case ExponentKind::ZeroOneThue:
      return static_cast<int>(thue_morse(n));
    case ExponentKind::PmRS:
      return rudin_shapiro(n) ? -1 : 1;
    case ExponentKind::ZeroOneRS:
      return static_cast<int>(rudin_shapiro(n));
    case ExponentKind::Plain:
      return 1;
  }
  return 1;
}

/// Exact sum of exponent(kind, k) for 0 <= k < count. Only the +-1 kinds are
/// accepted (InputError otherwise).
std::int64_t prefix_signed_sum(ExponentKind kind, std::uint64_t count);

}  // namespace tmprod
