#include "tmprod/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "tmprod/errors.hpp"

namespace tmprod {
namespace {

// 100 decimals of the Euler-Mascheroni constant.
constexpr std::string_view kEulerGammaLiteral =
    "0.57721566490153286060651209008240243104215933593992"
    "35988057672348848677267776646709369470632917467495";

class ConstantCache {
 public:
  template <class Compute>
  BigReal get(ConstantName name, Precision p, Compute&& compute) {
    const auto key = std::make_pair(name, p.digits);
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    // Computed outside the lock; a concurrent duplicate computation yields the
    // same value and the first insert wins.
    BigReal value = compute();
    std::unique_lock lock(mutex_);
    return values_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<ConstantName, int>, BigReal> values_;
};

ConstantCache& cache() {
  static ConstantCache instance;
  return instance;
}

std::mutex& bernoulli_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Rational>& bernoulli_table() {
  static std::vector<Rational> table{Rational(1)};
  return table;
}

BigReal log_gamma_stirling(const BigReal& z, Precision wp) {
  // (z - 1/2) ln z - z + ln(2 pi)/2 + sum_k B_2k / (2k (2k-1) z^{2k-1})
  const BigReal half(Rational(1, 2), wp);
  BigReal two_pi = pi(wp);
  two_pi.mul(2);
  BigReal result = (z - half) * log(z) - z + half * log(two_pi);

  const BigReal threshold = power_of_ten(-(wp.digits + 3), wp);
  const BigReal z2 = z * z;
  BigReal z_power = z;  // z^{2k-1}
  for (unsigned k = 1;; ++k) {
    if (k > 2000) throw EvaluationError("Stirling series failed to converge");
    const Rational coeff = bernoulli(2 * k) / Rational(2 * k * (2 * k - 1));
    BigReal term = BigReal(coeff, wp) / z_power;
    result += term;
    if (abs(term) < threshold) break;
    z_power *= z2;
  }
  return result;
}

}  // namespace

std::string_view to_string(ConstantName name) {
  switch (name) {
    case ConstantName::Pi:
      return "pi";
    case ConstantName::EulerGamma:
      return "euler_gamma";
    case ConstantName::GammaQuarter:
      return "gamma_quarter";
  }
  return "?";
}

Rational bernoulli(unsigned n) {
  std::lock_guard lock(bernoulli_mutex());
  auto& table = bernoulli_table();
  // B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    Rational sum = 0;
    BigInt binom = 1;  // C(m+1, k)
    for (unsigned k = 0; k < m; ++k) {
      sum += Rational(binom) * table[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    table.push_back(-sum / Rational(m + 1));
  }
  return table[n];
}

BigReal constant(ConstantName name, Precision p) {
  switch (name) {
    case ConstantName::Pi:
      return cache().get(name, p, [p] {
        BigReal r(p);
        mpfr_const_pi(r.raw(), MPFR_RNDN);
        return r;
      });
    case ConstantName::EulerGamma:
      if (p.digits > kEulerGammaDigits) {
        throw CapabilityError("Euler's constant is stored to " +
                              std::to_string(kEulerGammaDigits) +
                              " digits; " + std::to_string(p.digits) +
                              " requested");
      }
      return cache().get(name, p, [p] { return BigReal(kEulerGammaLiteral, p); });
    case ConstantName::GammaQuarter:
      return cache().get(name, p, [p] { return gamma(Rational(1, 4), p); });
  }
  throw InputError("unknown constant");
}

BigReal gamma(const Rational& x, Precision p) {
  if (x <= 0) throw InputError("gamma needs a positive argument, got " + to_string(x));
  const Precision wp = p.plus(kGuardDigits + 5);

  const double target = std::ceil(1.2 * wp.digits);
  const double floor_x = std::floor(x.convert_to<double>());
  const long shift = floor_x >= target ? 0 : static_cast<long>(target - floor_x);

  Rational rising = 1;  // x (x+1) ... (x+shift-1)
  for (long j = 0; j < shift; ++j) rising *= x + j;

  const BigReal z(Rational(x + shift), wp);
  BigReal value = exp(log_gamma_stirling(z, wp));
  value /= BigReal(rising, wp);
  return value.rounded(p);
}

}  // namespace tmprod
