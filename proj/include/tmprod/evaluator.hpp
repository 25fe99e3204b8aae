#pragma once

// Numerical evaluation of prod_{n >= start} R(n)^{e(n)} for the five exponent
// kinds.

#include <cstdint>
#include <optional>

#include "tmprod/bigreal.hpp"
#include "tmprod/factored_rational.hpp"
#include "tmprod/sequences.hpp"

namespace tmprod {

/// A rational function, an exponent sequence and the first index.
struct ProductSpec {
  FactoredRational rational;
  ExponentKind kind = ExponentKind::PmThue;
  std::int64_t start = 0;
};

/// Checks that the start index is 0 or 1, that no factor vanishes or turns
/// negative from the start index on (InputError / EvaluationError), and that
/// the product converges for its kind: balanced for the +-1 kinds, balanced
/// with equal root sums for the 0/1 kinds and for Plain (InputError naming the
/// failed condition).
void validate(const ProductSpec& spec);

struct EvalOptions {
  Precision precision{60};
  /// Dyadic splits applied before summing (+-1 Thue-Morse only).
  int split_levels = 8;
  /// Summed terms; defaults to kThueTerms or kRudinShapiroTerms by kind.
  std::optional<std::int64_t> terms;
  /// Orders of the asymptotic expansion of log R removed before summing a
  /// Rudin-Shapiro product (0 = plain direct summation).
  int rs_moments = 4;

  static constexpr std::int64_t kThueTerms = 4096;
  static constexpr std::int64_t kRudinShapiroTerms = 1'000'000;

  std::int64_t thue_terms() const { return terms.value_or(kThueTerms); }
  std::int64_t rs_terms() const { return terms.value_or(kRudinShapiroTerms); }
  /// Throws InputError unless split_levels >= 0, terms >= 16, digits >= 10
  /// and 0 <= rs_moments <= 12.
  void check() const;
};

struct EvalResult {
  BigReal value;
  /// Heuristic bound on |value - exact|.
  BigReal error_estimate;
  std::int64_t terms_used = 0;
  int split_levels = 0;
};

/// prod R(n)^{(-1)^{t_n}}. Applies `split_levels` dyadic splits, collecting
/// the exact rational boundaries, then sums (-1)^{t_n} log R_L(n) for
/// 1 <= n <= N. After L splits the summand decays like n^{-L-1}, so the tail
/// is estimated as value * |last summand| * N / max(L, 1) plus 10^{5-P}.
EvalResult eval_pm_thue(const ProductSpec& spec, const EvalOptions& opts);

/// prod R(n) by Gamma telescoping: prod_{n>=s} prod_i (n+a_i)^{m_i} =
/// prod_i Gamma(a_i + s)^{-m_i}. No truncation error.
EvalResult eval_plain(const ProductSpec& spec, const EvalOptions& opts);

/// prod R(n)^{t_n} = sqrt(plain / pm_thue), from 2 t_n = 1 - (-1)^{t_n}.
EvalResult eval_zero_one_thue(const ProductSpec& spec, const EvalOptions& opts);

/// prod R(n)^{(-1)^{v_n}} by direct summation over start <= n <= N, after
/// removing the first `rs_moments` orders of the expansion of log R(n) in
/// powers of 1/n. The removed part is a combination of
/// rho(n) + rho(2n+1) - rho(2n) - 2 rho(4n+1), whose Rudin-Shapiro sum over
/// n >= 1 is exactly rho(1). The tail is bounded by Abel summation with the
/// partial-sum bound |sum_{k<n} (-1)^{v_k}| <= 3 sqrt(n).
EvalResult eval_pm_rs(const ProductSpec& spec, const EvalOptions& opts);

/// prod R(n)^{v_n} = sqrt(plain / pm_rs).
EvalResult eval_zero_one_rs(const ProductSpec& spec, const EvalOptions& opts);

/// Dispatch on spec.kind after validate().
EvalResult evaluate(const ProductSpec& spec, const EvalOptions& opts);

/// f(a, b) = prod_{n>=1} ((n+a)/(n+b))^{(-1)^{t_n}}. Requires a, b > -1 so
/// that every factor is positive (which excludes the negative integers).
EvalResult f_value(const Rational& a, const Rational& b, const EvalOptions& opts);

/// g(x) = f(x/2, (x+1)/2) / (x+1) for x >= 0.
EvalResult g_value(const Rational& x, const EvalOptions& opts);

}  // namespace tmprod
