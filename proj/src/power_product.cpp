#include "tmprod/power_product.hpp"

#include "tmprod/errors.hpp"

namespace tmprod {
namespace {

void add_factors(BigInt n, const Rational& sign, std::map<BigInt, Rational>& out) {
  auto bump = [&](const BigInt& prime) {
    auto& e = out[prime];
    e += sign;
    if (e == 0) out.erase(prime);
  };
  while (n % 2 == 0) {
    bump(2);
    n /= 2;
  }
  for (BigInt d = 3; d * d <= n; d += 2) {
    while (n % d == 0) {
      bump(d);
      n /= d;
    }
  }
  if (n > 1) bump(n);
}

}  // namespace

PowerProduct PowerProduct::from_rational(const Rational& q) {
  if (q <= 0) throw InputError("power product of a nonpositive rational " + to_string(q));
  PowerProduct r;
  add_factors(boost::multiprecision::numerator(q), Rational(1), r.exponents_);
  add_factors(boost::multiprecision::denominator(q), Rational(-1), r.exponents_);
  return r;
}

PowerProduct& PowerProduct::operator*=(const PowerProduct& other) {
  for (const auto& [prime, e] : other.exponents_) {
    auto& mine = exponents_[prime];
    mine += e;
    if (mine == 0) exponents_.erase(prime);
  }
  return *this;
}

PowerProduct PowerProduct::pow(const Rational& e) const {
  PowerProduct r;
  if (e == 0) return r;
  for (const auto& [prime, x] : exponents_) r.exponents_.emplace(prime, x * e);
  return r;
}

std::optional<Rational> PowerProduct::as_rational() const {
  Rational value = 1;
  for (const auto& [prime, e] : exponents_) {
    if (boost::multiprecision::denominator(e) != 1) return std::nullopt;
    const BigInt k = boost::multiprecision::numerator(e);
    const BigInt power =
        boost::multiprecision::pow(prime, boost::multiprecision::abs(k).convert_to<unsigned>());
    value *= k > 0 ? Rational(power) : Rational(BigInt(1), power);
  }
  return value;
}

BigReal PowerProduct::evaluate(Precision p) const {
  const Precision wp = p.plus(kGuardDigits);
  BigReal value(1L, wp);
  for (const auto& [prime, e] : exponents_) value *= tmprod::pow(BigReal(prime, wp), e);
  return value.rounded(p);
}

std::string PowerProduct::render() const {
  if (auto q = as_rational()) return to_string(*q);
  std::string out;
  for (const auto& [prime, e] : exponents_) {
    if (!out.empty()) out += "*";
    out += prime.str();
    if (e != 1) out += "^(" + to_string(e) + ")";
  }
  return out;
}

}  // namespace tmprod
