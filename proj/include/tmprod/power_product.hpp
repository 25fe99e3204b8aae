#pragma once

#include <map>
#include <optional>
#include <string>

#include "tmprod/bigreal.hpp"

namespace tmprod {

/// A positive real of the form prod p_i^{e_i}: primes with rational
/// exponents. Since the logarithms of primes are linearly independent over
/// Q, two products denote the same number iff their maps are equal.
class PowerProduct {
 public:
  PowerProduct() = default;
  /// Factorizes q > 0 (trial division). Throws InputError for q <= 0.
  static PowerProduct from_rational(const Rational& q);

  PowerProduct& operator*=(const PowerProduct& other);
  PowerProduct pow(const Rational& e) const;
  friend PowerProduct operator*(PowerProduct a, const PowerProduct& b) { return a *= b; }
  friend bool operator==(const PowerProduct&, const PowerProduct&) = default;

  const std::map<BigInt, Rational>& exponents() const { return exponents_; }
  bool is_one() const { return exponents_.empty(); }
  /// The exact value when every exponent is an integer.
  std::optional<Rational> as_rational() const;

  BigReal evaluate(Precision p) const;
  /// "3/2" for rational values, otherwise "2^(-1/2)*3^(1/3)".
  std::string render() const;

 private:
  std::map<BigInt, Rational> exponents_;  // no zero exponents stored
};

}  // namespace tmprod
