#pragma once

// Exact rationals (GMP) and an extended-precision real (MPFR) whose
// precision travels with the value. Binary operations round to the larger
// precision of their operands.

#include <mpfr.h>

#include <boost/multiprecision/gmp.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tmprod {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "3", "-7/4" or "0.25" into an exact rational. Returns false on
/// malformed input or a zero denominator.
bool parse_rational(std::string_view text, Rational& out);
/// Non-empty string of decimal digits to BigInt (leading zeros allowed).
BigInt decimal_integer(std::string_view digits);
std::string to_string(const Rational& q);

/// Working precision in significant decimal digits.
struct Precision {
  int digits = 60;

  mpfr_prec_t bits() const;
  Precision plus(int extra) const { return Precision{digits + extra}; }
  friend auto operator<=>(Precision, Precision) = default;
};

/// Extra digits carried internally before rounding results back.
inline constexpr int kGuardDigits = 10;

class BigReal {
 public:
  explicit BigReal(Precision p = {});
  BigReal(long value, Precision p);
  BigReal(double value, Precision p);
  BigReal(const Rational& value, Precision p);
  BigReal(const BigInt& value, Precision p);
  /// Decimal literal; throws InputError when malformed.
  BigReal(std::string_view literal, Precision p);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  /// Copy rounded to `p`.
  BigReal rounded(Precision p) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// `digits` significant decimal digits, positional notation when the
  /// decimal exponent is moderate, scientific otherwise.
  std::string to_string(int digits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& mul(std::uint64_t k);
  BigReal& div(std::uint64_t k);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  friend BigReal operator-(const BigReal& x);

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

  friend BigReal abs(const BigReal& x);
  friend BigReal exp(const BigReal& x);
  friend BigReal log(const BigReal& x);
  friend BigReal sqrt(const BigReal& x);
  friend BigReal sin(const BigReal& x);
  /// x^e for x > 0 (any rational e) or x = 0 with e > 0.
  friend BigReal pow(const BigReal& x, const Rational& e);
  friend BigReal max(const BigReal& a, const BigReal& b);

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal pow(const BigReal& x, const Rational& e);
BigReal max(const BigReal& a, const BigReal& b);

/// 10^{exponent} at precision `p`.
BigReal power_of_ten(int exponent, Precision p);

}  // namespace tmprod
