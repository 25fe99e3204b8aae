#pragma once

// Gamma function at positive rationals and the handful of constants the
// identities need.

#include <string_view>

#include "tmprod/bigreal.hpp"

namespace tmprod {

enum class ConstantName { Pi, EulerGamma, GammaQuarter };

std::string_view to_string(ConstantName name);

/// Decimal digits of the embedded Euler-Mascheroni literal.
inline constexpr int kEulerGammaDigits = 100;

/// pi, gamma (Euler-Mascheroni) or Gamma(1/4) to `p`. Values are memoized
/// per (name, digits). Throws CapabilityError for EulerGamma beyond
/// kEulerGammaDigits.
BigReal constant(ConstantName name, Precision p);

inline BigReal pi(Precision p) { return constant(ConstantName::Pi, p); }

/// Gamma(x) for rational x > 0.
///
/// Stirling's series is applied to ln Gamma(x + m), where the shift m makes
/// x + m >= 1.2 * (working digits); at that size the series terms fall below
/// the working precision long before they start to grow. The shift is undone
/// by dividing by the exact rational x (x+1) ... (x+m-1). Internally works at
/// p + kGuardDigits and rounds back to p. Throws InputError for x <= 0.
BigReal gamma(const Rational& x, Precision p);

/// Exact Bernoulli number B_n (B_1 = -1/2). Cached.
Rational bernoulli(unsigned n);

}  // namespace tmprod
