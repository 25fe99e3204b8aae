#include "tmprod/evaluator.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "tmprod/errors.hpp"
#include "tmprod/numerics.hpp"

namespace tmprod {
namespace {

BigReal precision_floor(Precision p) { return power_of_ten(5 - p.digits, p); }

void require_kind(const ProductSpec& spec, ExponentKind kind) {
  if (spec.kind != kind) {
    throw InputError("expected a product with exponent kind " + std::string(to_string(kind)) +
                     ", got " + std::string(to_string(spec.kind)));
  }
}

EvalResult exact_one(const EvalOptions& opts, std::int64_t terms, int levels) {
  return {BigReal(1L, opts.precision), precision_floor(opts.precision), terms, levels};
}

// Sum of (-1)^{t_n} log R(n) for first <= n <= last.
BigReal thue_morse_log_sum(const FactoredRational& r, std::int64_t first, std::int64_t last,
                           Precision wp, BigReal& last_term) {
  const LogTermEvaluator log_r(r, wp);
  BigReal sum(wp);
  for (std::int64_t n = first; n <= last; ++n) {
    BigReal term = log_r(n);
    if (thue_morse(static_cast<std::uint64_t>(n))) {
      sum -= term;
    } else {
      sum += term;
    }
    if (n == last) last_term = std::move(term);
  }
  return sum;
}

// Coefficient of n^{-j} (j <= order) in rho_k(n) + rho_k(2n+1) - rho_k(2n) -
// 2 rho_k(4n+1) for rho_k(x) = x^{-k}.
std::vector<Rational> rs_relation_expansion(unsigned k, unsigned order) {
  std::vector<Rational> c(order + 1, Rational(0));
  if (k > order) return c;
  c[k] += 1;
  const Rational two_k = Rational(BigInt(1), boost::multiprecision::pow(BigInt(2), k));
  const Rational four_k = two_k * two_k;
  c[k] -= two_k;
  Rational binom = 1;  // C(-k, j)
  Rational half_j = 1;
  Rational quarter_j = 1;
  for (unsigned j = 0; k + j <= order; ++j) {
    c[k + j] += two_k * binom * half_j;
    c[k + j] -= 2 * four_k * binom * quarter_j;
    binom *= Rational(-static_cast<long>(k) - static_cast<long>(j), static_cast<long>(j) + 1);
    half_j /= 2;
    quarter_j /= 4;
  }
  return c;
}

// Coefficients of log R(n) = sum_j h_j n^{-j} for a balanced R (scale 1,
// net degree 0): h_j = (-1)^{j+1} M_j / j with M_j = sum_i m_i a_i^j.
std::vector<Rational> log_expansion(const FactoredRational& r, unsigned order) {
  std::vector<Rational> h(order + 1, Rational(0));
  for (unsigned j = 1; j <= order; ++j) {
    h[j] = r.moment(j) / Rational(j);
    if (j % 2 == 0) h[j] = -h[j];
  }
  return h;
}

struct RsCorrection {
  std::vector<Rational> coefficients;  // rho(x) = sum_k coefficients[k] x^{-k}
  unsigned residual_order = 1;         // log R - T rho = O(n^{-residual_order})
};

RsCorrection rs_correction(const FactoredRational& r, unsigned moments) {
  constexpr unsigned kLookahead = 3;
  const unsigned order = moments + kLookahead;
  std::vector<Rational> residual = log_expansion(r, order);
  RsCorrection out;
  out.coefficients.assign(moments + 1, Rational(0));
  for (unsigned k = 1; k <= moments; ++k) {
    const auto c = rs_relation_expansion(k, order);
    const Rational coeff = residual[k] / c[k];
    out.coefficients[k] = coeff;
    for (unsigned j = k; j <= order; ++j) residual[j] -= coeff * c[j];
  }
  out.residual_order = order;
  for (unsigned j = 1; j <= order; ++j) {
    if (residual[j] != 0) {
      out.residual_order = j;
      break;
    }
  }
  return out;
}

class RsCorrectionEvaluator {
 public:
  RsCorrectionEvaluator(const RsCorrection& c, Precision wp) : wp_(wp) {
    for (const auto& q : c.coefficients) coefficients_.emplace_back(q, wp);
  }

  bool empty() const { return coefficients_.size() <= 1; }

  BigReal rho(const BigReal& x) const {
    // Horner in 1/x.
    const BigReal inv = BigReal(1L, wp_) / x;
    BigReal acc(wp_);
    for (std::size_t k = coefficients_.size() - 1; k >= 1; --k) {
      acc += coefficients_[k];
      acc *= inv;
    }
    return acc;
  }

  BigReal relation(std::int64_t n) const {
    const BigReal x(static_cast<long>(n), wp_);
    BigReal two_n = x;
    two_n.mul(2);
    BigReal two_n1 = two_n + BigReal(1L, wp_);
    BigReal four_n1 = x;
    four_n1.mul(4);
    four_n1 += BigReal(1L, wp_);
    BigReal v = rho(x) + rho(two_n1) - rho(two_n);
    BigReal r4 = rho(four_n1);
    r4.mul(2);
    return v - r4;
  }

 private:
  Precision wp_;
  std::vector<BigReal> coefficients_;
};

}  // namespace

void EvalOptions::check() const {
  if (split_levels < 0) throw InputError("split levels must be >= 0");
  if (terms && *terms < 16) throw InputError("terms must be >= 16");
  if (precision.digits < 10) throw InputError("precision must be at least 10 digits");
  if (rs_moments < 0 || rs_moments > 12) throw InputError("rs moments must lie in [0, 12]");
}

void validate(const ProductSpec& spec) {
  checked_start(spec.start);
  if (auto n = pole_check(spec.rational, spec.start)) {
    throw EvaluationError("R has a zero or pole at n = " + std::to_string(*n));
  }
  if (auto n = nonpositive_check(spec.rational, spec.start)) {
    throw EvaluationError("some factor of R is not positive at n = " + std::to_string(*n) +
                          "; only positive factors are supported");
  }
  const ConvergenceClass c = classify(spec.rational);
  if (!c.pm_convergent()) throw InputError("product diverges: " + c.detail);
  const bool needs_full = !is_plus_minus(spec.kind);
  if (needs_full && !c.fully_convergent()) {
    throw InputError("product with exponent kind " + std::string(to_string(spec.kind)) +
                     " diverges: " + c.detail);
  }
}

EvalResult eval_pm_thue(const ProductSpec& spec, const EvalOptions& opts) {
  require_kind(spec, ExponentKind::PmThue);
  validate(spec);
  opts.check();
  const Precision p = opts.precision;
  const Precision wp = p.plus(kGuardDigits);
  const std::int64_t terms = opts.thue_terms();
  const int levels = opts.split_levels;
  if (spec.rational.is_one()) return exact_one(opts, terms, levels);

  Rational boundary = 1;
  FactoredRational current = spec.rational;
  std::int64_t start = spec.start;
  for (int level = 0; level < levels; ++level) {
    DyadicSplit s = dyadic_split(current, start);
    boundary *= s.boundary;
    current = std::move(s.rational);
    start = 1;
  }

  BigReal last(wp);
  const std::int64_t first = start;
  const BigReal sum = thue_morse_log_sum(current, first, first + terms - 1, wp, last);
  BigReal value = BigReal(boundary, wp) * exp(sum);

  BigReal tail = abs(last);
  tail.mul(static_cast<std::uint64_t>(terms));
  tail.div(static_cast<std::uint64_t>(std::max(levels, 1)));
  BigReal error = abs(value) * tail + precision_floor(p);
  return {value.rounded(p), error.rounded(p), terms, levels};
}

EvalResult eval_plain(const ProductSpec& spec, const EvalOptions& opts) {
  require_kind(spec, ExponentKind::Plain);
  validate(spec);
  opts.check();
  const Precision p = opts.precision;
  const Precision wp = p.plus(kGuardDigits);
  BigReal value(1L, wp);
  for (const auto& f : spec.rational.factors()) {
    const Rational arg = f.offset + spec.start;
    if (arg <= 0) {
      throw InputError("Gamma telescoping needs a_i + start > 0, got " + to_string(arg));
    }
    const BigReal g = gamma(arg, wp);
    for (int i = 0; i < std::abs(f.multiplicity); ++i) {
      if (f.multiplicity > 0) {
        value /= g;
      } else {
        value *= g;
      }
    }
  }
  BigReal error = max(abs(value), BigReal(1L, wp)) * precision_floor(p);
  return {value.rounded(p), error.rounded(p), 0, 0};
}

namespace {

EvalResult zero_one_from(const EvalResult& plain, const EvalResult& pm, Precision p) {
  const Precision wp = p.plus(kGuardDigits);
  if (pm.value.sign() <= 0 || plain.value.sign() <= 0) {
    throw EvaluationError("0/1 product needs positive plain and +-1 products");
  }
  BigReal value = sqrt(plain.value.rounded(wp) / pm.value.rounded(wp));
  // sqrt halves the relative error of the quotient.
  BigReal rel = plain.error_estimate.rounded(wp) / plain.value +
                pm.error_estimate.rounded(wp) / pm.value;
  BigReal error = value * rel / BigReal(2L, wp) + precision_floor(p);
  return {value.rounded(p), error.rounded(p), pm.terms_used, pm.split_levels};
}

}  // namespace

EvalResult eval_zero_one_thue(const ProductSpec& spec, const EvalOptions& opts) {
  require_kind(spec, ExponentKind::ZeroOneThue);
  validate(spec);
  const EvalResult plain = eval_plain({spec.rational, ExponentKind::Plain, spec.start}, opts);
  const EvalResult pm = eval_pm_thue({spec.rational, ExponentKind::PmThue, spec.start}, opts);
  return zero_one_from(plain, pm, opts.precision);
}

EvalResult eval_pm_rs(const ProductSpec& spec, const EvalOptions& opts) {
  require_kind(spec, ExponentKind::PmRS);
  validate(spec);
  opts.check();
  const Precision p = opts.precision;
  const Precision wp = p.plus(kGuardDigits);
  const std::int64_t terms = opts.rs_terms();
  if (spec.rational.is_one()) return exact_one(opts, terms, 0);

  const RsCorrection correction =
      rs_correction(spec.rational, static_cast<unsigned>(opts.rs_moments));
  const RsCorrectionEvaluator rho(correction, wp);
  const LogTermEvaluator log_r(spec.rational, wp);

  BigReal sum(wp);
  if (spec.start == 0) sum += log_r(0);  // v_0 = 0
  if (!rho.empty()) sum += rho.rho(BigReal(1L, wp));

  BigReal last(wp);
  // n = 0 was handled above; the sum over n >= 1 carries the correction.
  const std::int64_t last_n = spec.start + terms - 1;
  for (std::int64_t n = 1; n <= last_n; ++n) {
    BigReal term = log_r(n);
    if (!rho.empty()) term -= rho.relation(n);
    if (rudin_shapiro(static_cast<std::uint64_t>(n))) {
      sum -= term;
    } else {
      sum += term;
    }
    if (n == last_n) last = std::move(term);
  }
  BigReal value = exp(sum);

  // Abel summation with |S_n| <= 3 sqrt(n) and a residual decaying like
  // n^{-d}: |tail| <= 3 sqrt(N) |r(N)| (1 + d / (d - 1/2)).
  const double d = correction.residual_order;
  const double factor = 3.0 * std::sqrt(static_cast<double>(last_n)) * (1.0 + d / (d - 0.5));
  BigReal tail = abs(last) * BigReal(factor, wp);
  BigReal error = abs(value) * tail + precision_floor(p);
  return {value.rounded(p), error.rounded(p), terms, 0};
}

EvalResult eval_zero_one_rs(const ProductSpec& spec, const EvalOptions& opts) {
  require_kind(spec, ExponentKind::ZeroOneRS);
  validate(spec);
  const EvalResult plain = eval_plain({spec.rational, ExponentKind::Plain, spec.start}, opts);
  const EvalResult pm = eval_pm_rs({spec.rational, ExponentKind::PmRS, spec.start}, opts);
  return zero_one_from(plain, pm, opts.precision);
}

EvalResult evaluate(const ProductSpec& spec, const EvalOptions& opts) {
  switch (spec.kind) {
    case ExponentKind::PmThue:
      return eval_pm_thue(spec, opts);
    case ExponentKind::ZeroOneThue:
      return eval_zero_one_thue(spec, opts);
    case ExponentKind::PmRS:
      return eval_pm_rs(spec, opts);
    case ExponentKind::ZeroOneRS:
      return eval_zero_one_rs(spec, opts);
    case ExponentKind::Plain:
      return eval_plain(spec, opts);
  }
  throw InputError("unknown exponent kind");
}

EvalResult f_value(const Rational& a, const Rational& b, const EvalOptions& opts) {
  for (const Rational* x : {&a, &b}) {
    if (*x <= -1) {
      throw InputError("f(a, b) needs a, b > -1 so that every factor n + a is positive; got " +
                       to_string(*x));
    }
  }
  const RawFactor raw[] = {{Rational(1), a, 1}, {Rational(1), b, -1}};
  return eval_pm_thue({FactoredRational::normalize(raw), ExponentKind::PmThue, 1}, opts);
}

EvalResult g_value(const Rational& x, const EvalOptions& opts) {
  if (x < 0) throw InputError("g(x) is evaluated for x >= 0 only, got " + to_string(x));
  EvalResult f = f_value(x / 2, (x + 1) / 2, opts);
  const Precision wp = opts.precision.plus(kGuardDigits);
  const BigReal divisor(Rational(x + 1), wp);
  f.value = (f.value.rounded(wp) / divisor).rounded(opts.precision);
  f.error_estimate = (f.error_estimate.rounded(wp) / divisor).rounded(opts.precision);
  return f;
}

}  // namespace tmprod
