#pragma once

// Formal combinations of G(x) = log g(x), where
//   g(x) = f(x/2, (x+1)/2) / (x+1),  f(a, b) = prod_{n>=1} ((n+a)/(n+b))^{(-1)^{t_n}},
// and their reduction to explicit constants through the functional equation
//   G(x/2) - G((x+1)/2) - G(x) = log(1 + x).

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tmprod/evaluator.hpp"
#include "tmprod/power_product.hpp"

namespace tmprod {

/// sum_x c_x G(x) + sum_q d_q log q, with exact rational points x (never a
/// negative integer), positive rationals q and no zero coefficients.
class GExpression {
 public:
  GExpression& add_g(const Rational& point, const Rational& coeff);
  GExpression& add_log(const Rational& q, const Rational& coeff);

  GExpression& operator+=(const GExpression& other);
  GExpression& operator-=(const GExpression& other);
  GExpression scaled(const Rational& c) const;
  friend GExpression operator+(GExpression a, const GExpression& b) { return a += b; }
  friend GExpression operator-(GExpression a, const GExpression& b) { return a -= b; }
  friend bool operator==(const GExpression&, const GExpression&) = default;

  const std::map<Rational, Rational>& terms() const { return terms_; }
  const std::map<Rational, Rational>& log_constants() const { return logs_; }
  bool has_terms() const { return !terms_.empty(); }
  bool empty() const { return terms_.empty() && logs_.empty(); }

  /// exp of the log-constant part.
  PowerProduct constant_part() const;

  /// "G(1/2) - 2*G(1) + log(1/2)"; "0" when empty.
  std::string render() const;

 private:
  std::map<Rational, Rational> terms_;
  std::map<Rational, Rational> logs_;
};

/// Parses sums of terms "[c[*]]G(x)" and "[c[*]]log(q)" with rational c, x
/// and q > 0, e.g. "2G(1)", "G(1/2) - G(-1/3) + 1/2*log(3)". Throws ParseError.
GExpression parse_gexpression(std::string_view text);

/// The functional equation at x as an expression equal to zero:
/// G(x/2) - G((x+1)/2) - G(x) - log(1+x). Requires x > -1.
GExpression relation(const Rational& x);

/// log of prod_{n>=start} R(n)^{(-1)^{t_n}} as sum_i m_i G(a_i), exact when
/// sum_i m_i = 0. A start-0 product is first shifted to start 1 by moving
/// log R(0) into the constant part. Throws InputError unless the kind is
/// PmThue and R is balanced (validate() must pass).
GExpression expr_from_spec(const ProductSpec& spec);

struct Reduction {
  bool reduced = false;
  /// exp(expression) when reduced.
  PowerProduct constant;
  /// Certificate: expression = sum_x lambda_x (G(x/2) - G((x+1)/2) - G(x))
  /// + constants, so that the value is prod (1+x)^{lambda_x} times the
  /// constant part.
  std::map<Rational, Rational> certificate;
  /// Depth at which the reduction succeeded, or the depth searched.
  int depth = 0;
  /// What is left of the G part after elimination (empty when reduced).
  GExpression residual;
};

inline constexpr int kDefaultReduceDepth = 6;

/// Searches the relation lattice generated from the expression's points by
/// x -> 2x, 2x-1, x/2, (x+1)/2 (keeping points > -1), level by level up to
/// `depth`, and solves exactly over Q for a combination of functional
/// equations matching the G part. A failed search means "not reducible at
/// this depth", nothing more.
Reduction reduce(const GExpression& expr, int depth = kDefaultReduceDepth);

}  // namespace tmprod
