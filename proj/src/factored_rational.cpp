#include "tmprod/factored_rational.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "tmprod/errors.hpp"

namespace tmprod {
namespace {

Rational rational_power(const Rational& base, int e) {
  Rational r = 1;
  const Rational b = e >= 0 ? base : Rational(1) / base;
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

FactoredRational from_map(const Rational& scale, const std::map<Rational, int>& offsets) {
  std::vector<RawFactor> raw;
  raw.reserve(offsets.size());
  for (const auto& [a, m] : offsets) {
    if (m != 0) raw.push_back({Rational(1), a, m});
  }
  return FactoredRational::normalize(raw, scale);
}

std::string render_offset_factor(const AffineFactor& f, int power) {
  std::string s = "(n";
  if (f.offset > 0) {
    s += "+" + to_string(f.offset);
  } else if (f.offset < 0) {
    s += "-" + to_string(Rational(-f.offset));
  }
  s += ")";
  if (power != 1) s += "^" + std::to_string(power);
  return s;
}

}  // namespace

FactoredRational FactoredRational::normalize(std::span<const RawFactor> raw,
                                             const Rational& extra_scale) {
  if (extra_scale <= 0) throw InputError("scale must be positive");
  FactoredRational out;
  out.scale_ = extra_scale;
  std::map<Rational, int> merged;
  for (const RawFactor& f : raw) {
    if (f.multiplicity == 0) throw InputError("factor multiplicity must be nonzero");
    if (f.coefficient < 0) {
      throw InputError("leading coefficient must be positive, got " + to_string(f.coefficient));
    }
    if (f.coefficient == 0) {
      if (f.constant <= 0) {
        throw InputError("constant factor must be positive, got " + to_string(f.constant));
      }
      out.scale_ *= rational_power(f.constant, f.multiplicity);
      continue;
    }
    out.scale_ *= rational_power(f.coefficient, f.multiplicity);
    merged[f.constant / f.coefficient] += f.multiplicity;
  }
  for (const auto& [a, m] : merged) {
    if (m != 0) out.factors_.push_back({a, m});
  }
  return out;
}

int FactoredRational::net_degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.multiplicity;
  return d;
}

Rational FactoredRational::moment(unsigned k) const {
  Rational sum = 0;
  for (const auto& f : factors_) {
    Rational p = 1;
    for (unsigned i = 0; i < k; ++i) p *= f.offset;
    sum += p * f.multiplicity;
  }
  return sum;
}

Rational FactoredRational::value_at(const Rational& n) const {
  Rational v = scale_;
  for (const auto& f : factors_) {
    const Rational x = n + f.offset;
    if (x == 0) {
      throw EvaluationError("factor (n" + std::string(f.offset < 0 ? "" : "+") +
                            to_string(f.offset) + ") vanishes at n = " + to_string(n));
    }
    v *= rational_power(x, f.multiplicity);
  }
  return v;
}

FactoredRational FactoredRational::inverse() const {
  FactoredRational r;
  r.scale_ = Rational(1) / scale_;
  r.factors_ = factors_;
  for (auto& f : r.factors_) f.multiplicity = -f.multiplicity;
  return r;
}

FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
  std::map<Rational, int> merged;
  for (const auto& f : a.factors_) merged[f.offset] += f.multiplicity;
  for (const auto& f : b.factors_) merged[f.offset] += f.multiplicity;
  return from_map(a.scale_ * b.scale_, merged);
}

std::string FactoredRational::render() const {
  std::vector<std::string> num;
  std::vector<std::string> den;
  const BigInt u = boost::multiprecision::numerator(scale_);
  const BigInt v = boost::multiprecision::denominator(scale_);
  if (u != 1) num.push_back(u.str());
  if (v != 1) den.push_back(v.str());
  for (const auto& f : factors_) {
    if (f.multiplicity > 0) {
      num.push_back(render_offset_factor(f, f.multiplicity));
    } else {
      den.push_back(render_offset_factor(f, -f.multiplicity));
    }
  }
  std::string out;
  for (const auto& s : num) out += s;
  if (out.empty()) out = "1";
  if (den.empty()) return out;
  std::string d;
  for (const auto& s : den) d += s;
  return den.size() == 1 ? out + "/" + d : out + "/(" + d + ")";
}

std::string_view to_string(Convergence c) {
  switch (c) {
    case Convergence::Divergent:
      return "divergent";
    case Convergence::PmConvergent:
      return "pm-convergent";
    case Convergence::FullyConvergent:
      return "fully-convergent";
  }
  return "?";
}

ConvergenceClass classify(const FactoredRational& r) {
  if (const int d = r.net_degree(); d != 0) {
    return {Convergence::Divergent,
            "numerator and denominator have different degrees (net degree " +
                std::to_string(d) + "); they must have the same degree and the "
                "same leading coefficient"};
  }
  if (r.scale() != 1) {
    return {Convergence::Divergent,
            "numerator and denominator have different leading coefficients (ratio " +
                to_string(r.scale()) + "); they must have the same degree and the "
                "same leading coefficient"};
  }
  if (const Rational s = r.moment(1); s != 0) {
    return {Convergence::PmConvergent,
            "numerator and denominator do not have the same sum of roots "
            "(difference " + to_string(s) + ")"};
  }
  return {Convergence::FullyConvergent, ""};
}

std::int64_t checked_start(std::int64_t start) {
  if (start != 0 && start != 1) {
    throw InputError("start index must be 0 or 1, got " + std::to_string(start));
  }
  return start;
}

std::optional<std::int64_t> pole_check(const FactoredRational& r, std::int64_t start) {
  std::optional<std::int64_t> first;
  for (const auto& f : r.factors()) {
    if (boost::multiprecision::denominator(f.offset) != 1) continue;
    const BigInt root = -boost::multiprecision::numerator(f.offset);
    if (root < start || root > std::numeric_limits<std::int64_t>::max()) continue;
    const auto n = root.convert_to<std::int64_t>();
    if (!first || n < *first) first = n;
  }
  return first;
}

std::optional<std::int64_t> nonpositive_check(const FactoredRational& r, std::int64_t start) {
  for (const auto& f : r.factors()) {
    if (f.offset + start <= 0) return start;
  }
  return std::nullopt;
}

BigReal log_term(const FactoredRational& r, std::int64_t n, Precision p) {
  return LogTermEvaluator(r, p)(n);
}

LogTermEvaluator::LogTermEvaluator(const FactoredRational& r, Precision p)
    : precision_(p), constant_(r.scale(), p) {
  Rational c = r.scale();
  constexpr auto kLimit = std::numeric_limits<std::int64_t>::max() / 4;
  for (const auto& f : r.factors()) {
    const BigInt q = boost::multiprecision::denominator(f.offset);
    const BigInt a = boost::multiprecision::numerator(f.offset);
    if (q < kLimit && boost::multiprecision::abs(a) < kLimit) {
      small_.push_back({q.convert_to<std::int64_t>(), a.convert_to<std::int64_t>(),
                        f.multiplicity});
      c *= rational_power(Rational(q), -f.multiplicity);
    } else {
      large_.push_back(f);
    }
  }
  constant_ = BigReal(c, p);
}

BigReal LogTermEvaluator::value(std::int64_t n) const {
  BigReal num = constant_;
  BigReal den(1L, precision_);
  for (const auto& f : small_) {
    const __int128 x = static_cast<__int128>(f.slope) * n + f.offset;
    if (x <= 0) {
      throw EvaluationError("factor value " + std::to_string(static_cast<long long>(x)) +
                            "/" + std::to_string(f.slope) + " <= 0 at n = " +
                            std::to_string(n));
    }
    if (x <= static_cast<__int128>(std::numeric_limits<std::uint64_t>::max())) {
      const auto ux = static_cast<std::uint64_t>(x);
      BigReal& target = f.multiplicity > 0 ? num : den;
      for (int i = 0; i < std::abs(f.multiplicity); ++i) target.mul(ux);
    } else {
      const BigInt big = (BigInt(static_cast<std::uint64_t>(x >> 64)) << 64) +
                         BigInt(static_cast<std::uint64_t>(x));
      const BigReal scaled(big, precision_);
      BigReal& target = f.multiplicity > 0 ? num : den;
      for (int i = 0; i < std::abs(f.multiplicity); ++i) target *= scaled;
    }
  }
  for (const auto& f : large_) {
    const Rational x = Rational(n) + f.offset;
    if (x <= 0) throw EvaluationError("factor value <= 0 at n = " + std::to_string(n));
    const BigReal bx(x, precision_);
    BigReal& target = f.multiplicity > 0 ? num : den;
    for (int i = 0; i < std::abs(f.multiplicity); ++i) target *= bx;
  }
  return num / den;
}

BigReal LogTermEvaluator::operator()(std::int64_t n) const { return log(value(n)); }

DyadicSplit dyadic_split(const FactoredRational& r, std::int64_t start) {
  checked_start(start);
  if (const auto c = classify(r); !c.pm_convergent()) {
    throw InputError("dyadic split needs a convergent +-1 product: " + c.detail);
  }
  if (auto n = pole_check(r, start)) {
    throw EvaluationError("pole at n = " + std::to_string(*n));
  }
  if (auto n = nonpositive_check(r, start)) {
    throw EvaluationError("nonpositive factor at n = " + std::to_string(*n));
  }
  std::map<Rational, int> split;
  for (const auto& f : r.factors()) {
    split[f.offset / 2] += f.multiplicity;
    split[(f.offset + 1) / 2] -= f.multiplicity;
  }
  DyadicSplit out{from_map(Rational(1), split), Rational(1) / r.value_at(Rational(1))};
  if (start == 0) out.boundary *= r.value_at(Rational(0));
  if (auto n = pole_check(out.rational, 1)) {
    throw EvaluationError("split introduces a pole at n = " + std::to_string(*n));
  }
  if (auto n = nonpositive_check(out.rational, 1)) {
    throw EvaluationError("split introduces a nonpositive factor at n = " + std::to_string(*n));
  }
  return out;
}

}  // namespace tmprod
