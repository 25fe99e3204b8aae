#include "tmprod/analysis.hpp"

#include "tmprod/errors.hpp"
#include "tmprod/numerics.hpp"

namespace tmprod {

FlajoletMartin flajolet_martin(const EvalOptions& opts) {
  const Precision p = opts.precision;
  if (p.digits > kEulerGammaDigits) {
    throw CapabilityError("the Flajolet-Martin constant phi needs Euler's constant, stored to " +
                          std::to_string(kEulerGammaDigits) + " digits");
  }
  const Precision wp = p.plus(kGuardDigits);

  FlajoletMartin out{
      g_value(Rational(0), opts),
      eval_pm_thue({parse_factored("(4n+1)(4n+2)/((4n)(4n+3))"), ExponentKind::PmThue, 1}, opts),
      BigReal(p), BigReal(p), BigReal(p), BigReal(p)};

  const BigReal g0 = out.g0.value.rounded(wp);
  const BigReal r = out.R.value.rounded(wp);
  const BigReal e_gamma =
      exp(constant(ConstantName::EulerGamma, Precision{std::min(wp.digits, kEulerGammaDigits)})
              .rounded(wp));
  const BigReal prefactor = e_gamma / sqrt(BigReal(2L, wp));

  out.phi = (prefactor * BigReal(Rational(2, 3), wp) * r).rounded(p);
  out.phi_via_g0 = (prefactor / g0).rounded(p);
  out.product = (r * g0).rounded(p);
  out.product_error = (out.R.error_estimate.rounded(wp) * g0 +
                       r * out.g0.error_estimate.rounded(wp) + power_of_ten(5 - p.digits, wp))
                          .rounded(p);

  const BigReal deviation = abs(r * g0 - BigReal(Rational(3, 2), wp));
  if (deviation > out.product_error) {
    throw ConsistencyError("R * g(0) = " + out.product.to_string(p.digits) +
                           " differs from 3/2 by more than its error estimate " +
                           out.product_error.to_string(3));
  }
  return out;
}

std::vector<RemainderSign> remainder_sign_probe(const Rational& a, const Rational& b,
                                                unsigned k, std::int64_t n_max,
                                                std::int64_t n_tail) {
  if (!(a > b && b > 0)) {
    throw InputError("remainder probe needs a > b > 0 so that log((x+a)/(x+b)) is "
                     "completely monotone");
  }
  if (k > 16) throw InputError("remainder probe supports k <= 16");
  if (n_max < 0 || n_tail < n_max) throw InputError("need 0 <= n_max <= N_tail");

  const RawFactor raw[] = {{Rational(1), a, 1}, {Rational(1), b, -1}};
  FactoredRational r = FactoredRational::normalize(raw);
  for (unsigned level = 0; level < k; ++level) r = dyadic_split(r, 1).rational;

  // The terms shrink like j^{-k-1}; 40 digits leave ample room for 2^20 of
  // them.
  const Precision wp{40};
  const LogTermEvaluator term(r, wp);
  std::vector<RemainderSign> rows(static_cast<std::size_t>(n_max + 1));
  BigReal remainder(wp);
  for (std::int64_t j = n_tail; j >= 0; --j) {
    const BigReal t = term(j);
    if (thue_morse(static_cast<std::uint64_t>(j))) {
      remainder -= t;
    } else {
      remainder += t;
    }
    if (j <= n_max) {
      rows[static_cast<std::size_t>(j)] = {j, remainder.sign(),
                                          exponent(ExponentKind::PmThue, static_cast<std::uint64_t>(j))};
    }
  }
  return rows;
}

ScanReport monotonicity_scan(const Rational& x_lo, const Rational& x_hi, std::int64_t steps,
                             const EvalOptions& opts) {
  if (x_lo < 0 || x_lo >= x_hi) throw InputError("monotonicity scan needs 0 <= x_lo < x_hi");
  if (steps < 0) throw InputError("steps must be >= 0");
  ScanReport report;
  const Rational step = steps == 0 ? Rational(0) : (x_hi - x_lo) / steps;
  for (std::int64_t i = 0; i <= steps; ++i) {
    const Rational x = x_lo + step * i;
    report.points.push_back({x, f_value(x / 2, (x + 1) / 2, opts)});
  }
  for (std::size_t i = 0; i + 1 < report.points.size(); ++i) {
    const EvalResult& lo = report.points[i].h;
    const EvalResult& hi = report.points[i + 1].h;
    if (!(lo.value - hi.value > lo.error_estimate + hi.error_estimate)) {
      report.violations.push_back(i);
    }
  }
  return report;
}

}  // namespace tmprod
