#pragma once

// Analytic probes around g: the Flajolet-Martin constants, the sign of
// Thue-Morse remainders of T^k G and the monotonicity of x -> f(x/2, (x+1)/2).

#include <cstdint>
#include <vector>

#include "tmprod/evaluator.hpp"

namespace tmprod {

struct FlajoletMartin {
  EvalResult g0;  ///< g(0) = prod_{n>=1} (2n/(2n+1))^{(-1)^{t_n}}
  EvalResult R;   ///< prod_{n>=1} ((4n+1)(4n+2)/(4n(4n+3)))^{(-1)^{t_n}}
  BigReal phi;          ///< 2^{-1/2} e^gamma (2/3) R
  BigReal phi_via_g0;   ///< 2^{-1/2} e^gamma / g(0)
  BigReal product;      ///< R * g(0), which equals 3/2
  BigReal product_error;  ///< combined error estimate of `product`
};

/// Evaluates both constants and checks |R g(0) - 3/2| against the combined
/// error estimate (ConsistencyError on failure). Precision is limited by the
/// stored digits of Euler's constant (CapabilityError).
FlajoletMartin flajolet_martin(const EvalOptions& opts);

struct RemainderSign {
  std::int64_t n = 0;
  int sign = 0;      ///< sign of sum_{j=n}^{N_tail} (-1)^{t_j} T^k G(j)
  int expected = 0;  ///< (-1)^{t_n}
};

/// With G(x) = log((x+a)/(x+b)) and T G(x) = G(2x) - G(2x+1), reports for
/// 0 <= n <= n_max the sign of the truncated remainder
/// sum_{j=n}^{N_tail} (-1)^{t_j} T^k G(j) next to (-1)^{t_n}. T^k G(j) is
/// log S_k(j) where S_k is R = (n+a)/(n+b) split k times. Requires
/// a > b > 0 (G completely monotone) and k <= 16; InputError otherwise.
std::vector<RemainderSign> remainder_sign_probe(const Rational& a, const Rational& b,
                                                unsigned k, std::int64_t n_max,
                                                std::int64_t n_tail);

struct ScanPoint {
  Rational x;
  EvalResult h;  ///< f(x/2, (x+1)/2)
};

struct ScanReport {
  std::vector<ScanPoint> points;
  /// Indices i where h(x_{i+1}) < h(x_i) is not established: the drop is not
  /// larger than the two error estimates combined.
  std::vector<std::size_t> violations;

  bool strictly_decreasing() const { return violations.empty(); }
};

/// Evaluates h(x) = f(x/2, (x+1)/2) at x_lo + i (x_hi - x_lo) / steps for
/// 0 <= i <= steps (a single point when steps == 0). Requires
/// 0 <= x_lo < x_hi.
ScanReport monotonicity_scan(const Rational& x_lo, const Rational& x_hi, std::int64_t steps,
                             const EvalOptions& opts);

}  // namespace tmprod
