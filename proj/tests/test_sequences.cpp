#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tmprod/errors.hpp"
#include "tmprod/sequences.hpp"

using namespace tmprod;

TEST(Sequences, ThueMorsePrefix) {
  const int expected[] = {0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1};
  for (unsigned n = 0; n < 12; ++n) EXPECT_EQ(thue_morse(n), expected[n]) << n;
}

TEST(Sequences, RudinShapiroPrefix) {
  const int expected[] = {0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1};
  for (unsigned n = 0; n < 16; ++n) EXPECT_EQ(rudin_shapiro(n), expected[n]) << n;
}

TEST(Sequences, ThueMorseRecurrencesExhaustive) {
  for (std::uint64_t n = 0; n < (1u << 20); ++n) {
    ASSERT_EQ(thue_morse(2 * n), thue_morse(n));
    ASSERT_EQ(thue_morse(2 * n + 1), 1 - thue_morse(n));
  }
}

TEST(Sequences, RudinShapiroRecurrencesExhaustive) {
  for (std::uint64_t n = 0; n < (1u << 18); ++n) {
    ASSERT_EQ(rudin_shapiro(2 * n), rudin_shapiro(n));
    ASSERT_EQ(rudin_shapiro(4 * n + 1), rudin_shapiro(n));
    ASSERT_EQ(rudin_shapiro(4 * n + 3), 1 - rudin_shapiro(2 * n + 1));
  }
}

TEST(Sequences, AgreeWithStringDefinitions) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    ASSERT_EQ(static_cast<int>(thue_morse(n)), oracle::thue_morse(n));
    ASSERT_EQ(static_cast<int>(rudin_shapiro(n)), oracle::rudin_shapiro(n));
  }
}

TEST(Sequences, BlockParityCrossCheck) {
  const DigitWord one = parse_digit_word("1", 2);
  const DigitWord eleven = parse_digit_word("11", 2);
  for (std::uint64_t n = 0; n < (1u << 12); ++n) {
    ASSERT_EQ(block_parity(one, 2, n), thue_morse(n));
    ASSERT_EQ(block_parity(eleven, 2, n), rudin_shapiro(n));
  }
}

TEST(Sequences, BlockParityOtherWordsAndBases) {
  for (const auto& [word, base] : std::vector<std::pair<std::string, unsigned>>{
           {"10", 2}, {"101", 2}, {"00", 2}, {"2", 3}, {"12", 3}, {"a", 16}, {"11", 10}}) {
    const DigitWord w = parse_digit_word(word, base);
    for (std::uint64_t n = 0; n < 3000; ++n) {
      ASSERT_EQ(block_parity(w, base, n), oracle::count_occurrences(n, base, word) % 2)
          << word << " base " << base << " n " << n;
    }
  }
}

TEST(Sequences, BlockParityOfZeroIsZero) {
  EXPECT_EQ(block_parity(parse_digit_word("0", 2), 2, 0), 0u);
  EXPECT_EQ(block_parity(parse_digit_word("00", 10), 10, 0), 0u);
}

TEST(Sequences, DigitWordErrors) {
  EXPECT_THROW(parse_digit_word("", 2), InputError);
  EXPECT_THROW(parse_digit_word("2", 2), InputError);
  EXPECT_THROW(parse_digit_word("1?", 10), InputError);
  const DigitWord w{1};
  EXPECT_THROW(block_parity(w, 1, 5), InputError);
  EXPECT_THROW(block_parity(DigitWord{}, 2, 5), InputError);
}

TEST(Sequences, ExponentAccessor) {
  EXPECT_EQ(exponent(ExponentKind::PmThue, 1), -1);
  EXPECT_EQ(exponent(ExponentKind::ZeroOneThue, 1), 1);
  EXPECT_EQ(exponent(ExponentKind::PmRS, 3), -1);
  EXPECT_EQ(exponent(ExponentKind::ZeroOneRS, 3), 1);
  EXPECT_EQ(exponent(ExponentKind::Plain, 3), 1);
}

TEST(Sequences, KindNamesRoundTrip) {
  for (auto k : {ExponentKind::PmThue, ExponentKind::ZeroOneThue, ExponentKind::PmRS,
                 ExponentKind::ZeroOneRS, ExponentKind::Plain}) {
    EXPECT_EQ(exponent_kind_from_string(to_string(k)), k);
  }
  EXPECT_FALSE(exponent_kind_from_string("tm").has_value());
}

TEST(Sequences, PrefixSignedSums) {
  // Thue-Morse blocks of length 2^k (k >= 1) sum to zero.
  for (unsigned k = 1; k < 20; ++k) EXPECT_EQ(prefix_signed_sum(ExponentKind::PmThue, 1u << k), 0);
  EXPECT_EQ(prefix_signed_sum(ExponentKind::PmThue, 3), -1);
  EXPECT_THROW(prefix_signed_sum(ExponentKind::ZeroOneThue, 3), InputError);
}

TEST(Sequences, RudinShapiroPartialSumsStayBelowThreeRootN) {
  std::int64_t s = 0;
  for (std::uint64_t n = 1; n <= (1u << 18); ++n) {
    s += rudin_shapiro(n - 1) ? -1 : 1;
    ASSERT_LE(static_cast<double>(std::llabs(s)), 3.0 * std::sqrt(static_cast<double>(n)));
  }
  EXPECT_EQ(prefix_signed_sum(ExponentKind::PmRS, 1u << 18), s);
}
