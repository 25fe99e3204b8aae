#include "tmprod/bigreal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <string>

#include "tmprod/errors.hpp"

namespace tmprod {
namespace {

struct MpfrStringDeleter {
  void operator()(char* s) const { mpfr_free_str(s); }
};

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

// Decimal digits to BigInt. Leading zeros are dropped first: the string
// constructor would read "025" as octal.
BigInt decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

bool parse_rational(std::string_view text, Rational& out) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return false;

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return false;
    const BigInt d = decimal_integer(den);
    if (d == 0) return false;
    value = Rational(decimal_integer(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return false;
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      return false;
    BigInt scale = boost::multiprecision::pow(BigInt(10),
                                              static_cast<unsigned>(frac.size()));
    const std::string digits = std::string(whole.empty() ? "0" : whole) + std::string(frac);
    value = Rational(decimal_integer(digits), scale);
  } else {
    if (!all_digits(text)) return false;
    value = Rational(decimal_integer(text));
  }
  out = negative ? Rational(-value) : value;
  return true;
}

std::string to_string(const Rational& q) { return q.str(); }

mpfr_prec_t Precision::bits() const {
  // log2(10) ~ 3.3219; a few spare bits so that `digits` are all meaningful.
  return static_cast<mpfr_prec_t>(std::ceil(std::max(digits, 1) * 3.321928094887362)) + 4;
}

BigReal::BigReal(Precision p) {
  mpfr_init2(value_, p.bits());
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, Precision p) {
  mpfr_init2(value_, p.bits());
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(double value, Precision p) {
  mpfr_init2(value_, p.bits());
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, Precision p) {
  mpfr_init2(value_, p.bits());
  mpfr_set_q(value_, value.backend().data(), MPFR_RNDN);
}

BigReal::BigReal(const BigInt& value, Precision p) {
  mpfr_init2(value_, p.bits());
  mpfr_set_z(value_, value.backend().data(), MPFR_RNDN);
}

BigReal::BigReal(std::string_view literal, Precision p) {
  mpfr_init2(value_, p.bits());
  std::string s(literal);
  char* end = nullptr;
  mpfr_strtofr(value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    mpfr_clear(value_);
    throw InputError("malformed decimal literal '" + s + "'");
  }
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Steal the limbs; leave `other` as a valid 2-bit zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::rounded(Precision p) const {
  BigReal r(p);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string BigReal::to_string(int digits) const {
  digits = std::max(digits, 1);
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) {
    return digits == 1 ? "0" : "0." + std::string(static_cast<std::size_t>(digits - 1), '0');
  }
  mpfr_exp_t e = 0;
  std::unique_ptr<char, MpfrStringDeleter> raw(
      mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN));
  std::string mant(raw.get());
  std::string sign;
  if (!mant.empty() && mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^e
  if (e > -5 && e <= digits) {
    if (e <= 0) return sign + "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
    auto head = mant.substr(0, static_cast<std::size_t>(e));
    auto tail = mant.substr(static_cast<std::size_t>(e));
    return sign + head + (tail.empty() ? "" : "." + tail);
  }
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  return out + "e" + std::to_string(static_cast<long>(e - 1));
}

namespace {

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return std::max(a.bits(), b.bits());
}

}  // namespace

BigReal& BigReal::operator+=(const BigReal& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::mul(std::uint64_t k) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  mpfr_mul_ui(value_, value_, static_cast<unsigned long>(k), MPFR_RNDN);
  return *this;
}

BigReal& BigReal::div(std::uint64_t k) {
  mpfr_div_ui(value_, value_, static_cast<unsigned long>(k), MPFR_RNDN);
  return *this;
}

BigReal operator-(const BigReal& x) {
  BigReal r(x);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater
                        : std::partial_ordering::equivalent);
}

BigReal abs(const BigReal& x) {
  BigReal r(x);
  mpfr_abs(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r(x);
  mpfr_exp(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x) {
  BigReal r(x);
  mpfr_log(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  BigReal r(x);
  mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigReal sin(const BigReal& x) {
  BigReal r(x);
  mpfr_sin(r.value_, x.value_, MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const Rational& e) {
  BigReal r(x);
  const BigInt num = boost::multiprecision::numerator(e);
  const BigInt den = boost::multiprecision::denominator(e);
  if (den == 1 && boost::multiprecision::abs(num) <= 1'000'000) {
    mpfr_pow_si(r.value_, x.value_, num.convert_to<long>(), MPFR_RNDN);
    return r;
  }
  if (den <= 1'000'000 && boost::multiprecision::abs(num) <= 1'000'000) {
    // Root first, then integer power: exact for perfect powers.
    mpfr_rootn_ui(r.value_, x.value_, den.convert_to<unsigned long>(), MPFR_RNDN);
    mpfr_pow_si(r.value_, r.value_, num.convert_to<long>(), MPFR_RNDN);
    return r;
  }
  BigReal ev(e, Precision{}.plus(0));
  mpfr_set_prec(ev.value_, x.bits());
  mpfr_set_q(ev.value_, e.backend().data(), MPFR_RNDN);
  mpfr_pow(r.value_, x.value_, ev.value_, MPFR_RNDN);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) {
  BigReal r(Precision{});
  mpfr_set_prec(r.value_, wider(a, b));
  mpfr_max(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigReal power_of_ten(int exponent, Precision p) {
  BigReal r(10L, p);
  mpfr_pow_si(r.raw(), r.raw(), exponent, MPFR_RNDN);
  return r;
}

}  // namespace tmprod
