#pragma once

// Rational functions R(n) = s * prod_i (n + a_i)^{m_i} with exact rational
// offsets, the convergence classification of prod R(n)^{e(n)} and the dyadic
// split R(n) -> R(2n) / R(2n+1).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tmprod/bigreal.hpp"

namespace tmprod {

/// The monic factor (n + offset)^multiplicity; multiplicity != 0, negative
/// multiplicities belong to the denominator.
struct AffineFactor {
  Rational offset;
  int multiplicity = 1;

  friend bool operator==(const AffineFactor&, const AffineFactor&) = default;
};

/// A factor as written by a user: (coefficient * n + constant)^multiplicity.
/// A zero coefficient denotes the constant factor `constant^multiplicity`.
struct RawFactor {
  Rational coefficient;
  Rational constant;
  int multiplicity = 1;
};

class FactoredRational {
 public:
  /// R == 1.
  FactoredRational() = default;

  /// Canonical form: every (c n + d)^m with c > 0 becomes c^m (n + d/c)^m,
  /// equal offsets are merged and zero multiplicities dropped, factors sorted
  /// by ascending offset. Constant factors (c = 0) must have d > 0 and go into
  /// the scale. Throws InputError for c < 0, a nonpositive constant, m == 0
  /// or a nonpositive extra scale.
  static FactoredRational normalize(std::span<const RawFactor> raw,
                                    const Rational& extra_scale = Rational(1));

  const Rational& scale() const { return scale_; }
  std::span<const AffineFactor> factors() const { return factors_; }
  bool is_one() const { return scale_ == 1 && factors_.empty(); }

  /// Sum of multiplicities.
  int net_degree() const;
  /// sum_i m_i * a_i^k. For k = 1 this is (denominator root sum) - (numerator
  /// root sum).
  Rational moment(unsigned k) const;

  /// Exact R(n). Throws EvaluationError at a pole.
  Rational value_at(const Rational& n) const;

  FactoredRational inverse() const;
  friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b);
  friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

  /// Re-parsable text in the factor grammar using monic factors, e.g.
  /// "(n+1/2)/(n+1)" or "3(n)^2/(2(n+1)(n+3/4))".
  std::string render() const;

 private:
  Rational scale_{1};
  std::vector<AffineFactor> factors_;  // strictly ascending offsets
};

/// Parses the factor grammar:
///
///   product   := term { term } [ "/" "(" term { term } ")" | "/" term ]
///   term      := [ integer ] "(" linear ")" [ "^" integer ] | integer
///   linear    := [ integer ] "n" [ ("+" | "-") rational ] | rational
///   rational  := integer [ "/" integer ]
///
/// Whitespace is ignored and U+2212 is accepted as a minus sign. Throws
/// ParseError (with byte position) on syntax errors and on a zero or
/// negative leading coefficient.
FactoredRational parse_factored(std::string_view text);

enum class Convergence { Divergent, PmConvergent, FullyConvergent };

std::string_view to_string(Convergence c);

struct ConvergenceClass {
  Convergence tag = Convergence::Divergent;
  /// Which condition failed (empty for FullyConvergent).
  std::string detail;

  /// The +-1 Thue-Morse / Rudin-Shapiro products converge.
  bool pm_convergent() const { return tag != Convergence::Divergent; }
  /// The plain product and the 0/1 products converge as well.
  bool fully_convergent() const { return tag == Convergence::FullyConvergent; }
};

/// Balanced (equal degrees and leading coefficients) gives PmConvergent;
/// balanced with equal root sums gives FullyConvergent.
ConvergenceClass classify(const FactoredRational& r);

/// Start index of a product; only 0 and 1 occur.
std::int64_t checked_start(std::int64_t start);

/// Smallest integer n >= start at which some factor n + a_i vanishes.
std::optional<std::int64_t> pole_check(const FactoredRational& r, std::int64_t start);

/// Smallest integer n >= start at which some factor n + a_i is <= 0. The
/// factors increase with n, so this is `start` or nothing.
std::optional<std::int64_t> nonpositive_check(const FactoredRational& r, std::int64_t start);

/// log R(n) at precision p. Throws EvaluationError if some factor is <= 0 at
/// n.
BigReal log_term(const FactoredRational& r, std::int64_t n, Precision p);

/// Repeated evaluation of log R(n) for increasing n. Offsets are cleared of
/// denominators once, so each term costs one machine multiplication or
/// division per factor and a single logarithm.
class LogTermEvaluator {
 public:
  LogTermEvaluator(const FactoredRational& r, Precision p);
  /// log R(n). Throws EvaluationError if some factor is <= 0 at n.
  BigReal operator()(std::int64_t n) const;
  /// R(n) itself.
  BigReal value(std::int64_t n) const;

 private:
  struct IntegerFactor {
    std::int64_t slope;   // denominator of the offset
    std::int64_t offset;  // numerator of the offset
    int multiplicity;
  };
  Precision precision_;
  BigReal constant_;  // s * prod q_i^{-m_i}
  std::vector<IntegerFactor> small_;
  std::vector<AffineFactor> large_;  // offsets too large for 64-bit arithmetic
};

struct DyadicSplit {
  FactoredRational rational;  // n -> R(2n) / R(2n+1)
  Rational boundary;
};

/// The exact identity
///   prod_{n>=start} R(n)^{(-1)^{t_n}} = boundary * prod_{n>=1} S(n)^{(-1)^{t_n}}
/// with S(n) = R(2n)/R(2n+1): every (n+a)^m becomes
/// (n + a/2)^m (n + (1+a)/2)^{-m}; boundary = 1/R(1) for start 1 and
/// R(0)/R(1) for start 0. If |log R(n)| = O(n^-k) then log S(n) = O(n^-k-1).
/// Throws InputError unless R is PmConvergent, EvaluationError if a pole or
/// nonpositive factor is met.
DyadicSplit dyadic_split(const FactoredRational& r, std::int64_t start);

}  // namespace tmprod
