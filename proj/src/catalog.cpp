#include "tmprod/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <future>

#include <mpfr.h>

#include "tmprod/errors.hpp"

namespace tmprod {
namespace {

bool is_nonpositive_integer(const Rational& x) {
  return x <= 0 && boost::multiprecision::denominator(x) == 1;
}

bool is_negative_half_integer(const Rational& x) {
  return x < 0 && boost::multiprecision::denominator(x) == 2;
}

RawFactor lin(long c, const Rational& d, int m = 1) { return RawFactor{Rational(c), d, m}; }

ProductSpec spec_of(std::string_view text, ExponentKind kind, std::int64_t start) {
  return ProductSpec{parse_factored(text), kind, start};
}

ClosedForm q(long num, long den = 1) { return ClosedForm::rational(Rational(num, den)); }

ClosedForm sqrt2() { return q(2).pow(Rational(1, 2)); }

const ClosedForm kPi = ClosedForm::constant(ClosedForm::Leaf::Pi);
const ClosedForm kGammaQuarter = ClosedForm::constant(ClosedForm::Leaf::GammaQuarter);

std::vector<Identity> build_catalog() {
  using K = ExponentKind;
  const char* rs_rational = "4(n+2)(2n+1)^3(2n+3)^3/((n+3)(n+1)^2(4n+3)^4)";
  std::vector<Identity> out;
  auto add = [&](std::string name, ProductSpec spec, ClosedForm cf, std::string provenance) {
    out.push_back(Identity{std::move(name), std::move(spec), std::move(cf), std::move(provenance)});
  };

  add("WR", spec_of("(2n+1)/(2n+2)", K::PmThue, 0), q(2).pow(Rational(-1, 2)),
      "Woods-Robbins product: square root of family (ii) at a = 0 times the n = 0 factor");
  add("C3b", spec_of("(4n+1)/(4n+3)", K::PmThue, 0), q(1, 2),
      "family (iii) at a = 1/2, inverted and extended to n >= 0");
  add("C3c", spec_of("(2n-1)(4n+1)/((2n+1)(4n-1))", K::PmThue, 1), q(2),
      "family (iii) at a = -1/2");
  add("C3d", spec_of("(n+1)(2n+1)/((n+2)(2n+3))", K::PmThue, 0), q(1, 2),
      "family (i) at a = 1, b = 2, extended to n >= 0, times WR squared");
  add("C3e", spec_of("(2n+2)(4n+3)/((2n+3)(4n+5))", K::PmThue, 0), sqrt2() / q(2),
      "family (i) at a = 1, b = 3/2, extended to n >= 0, times WR");
  add("C3f", spec_of("(n+1)(4n+5)/((n+2)(4n+3))", K::PmThue, 0), q(1),
      "family (i) at a = 2, b = 3/2, extended to n >= 0 and inverted");
  add("C3g", spec_of("(n+1)(2n+2)/((n+2)(2n+3))", K::PmThue, 0), sqrt2() / q(2),
      "family (ii) at a = 1, extended to n >= 0, times WR; also C3e times C3f");
  add("C3h", spec_of("(n+1)(4n+5)/((n+2)(4n+1))", K::PmThue, 0), q(2), "C3f divided by C3b");
  add("C3i", spec_of("(2n+2)(4n+1)/((2n+3)(4n+5))", K::PmThue, 0), sqrt2() / q(4),
      "C3g divided by C3h");
  add("C3j", spec_of("(2n+1)(4n+1)/((2n+3)(4n+5))", K::PmThue, 0), q(1, 4), "C3i times WR");
  add("C3k", spec_of("(4n+1)(8n+7)/((4n+2)(8n+3))", K::PmThue, 0), q(1),
      "family (iv) at a = 3/4, extended to n >= 0");
  add("C3l", spec_of("(8n+1)(8n+7)/((8n+3)(8n+5))", K::PmThue, 0), q(1, 2),
      "family (i) at a = 3/4, b = 1/4, extended to n >= 0, times C3b");

  add("T5a", spec_of("(4n+1)(4n+4)/((4n+2)(4n+3))", K::ZeroOneThue, 0),
      kPi.pow(Rational(3, 4)) * sqrt2() / kGammaQuarter,
      "0/1 Thue-Morse: Gamma telescoping of the plain product over the once-split WR product");
  add("T5b", spec_of("(n+1)(4n+5)/((n+2)(4n+1))", K::ZeroOneThue, 0), sqrt2(),
      "0/1 Thue-Morse: plain product 4 over C3h");
  add("T5c", spec_of("(8n+1)(8n+7)/((8n+3)(8n+5))", K::ZeroOneThue, 0),
      (q(2) * sqrt2() - q(2)).pow(Rational(1, 2)),
      "0/1 Thue-Morse: plain product tan(pi/8) over C3l");

  add("T6a", spec_of(rs_rational, K::PmRS, 0), q(1),
      "Rudin-Shapiro: R(n)R(2n+1)/(R(2n)R(4n+1)^2) for R(X) = (X+2)^2/((X+1)(X+3)), "
      "times the n = 0 factor");
  // The plain product telescopes to 16 Gamma(3/4)^4 / pi^3 and T6a is 1, so
  // the 0/1 product is 4 Gamma(3/4)^2 / pi^(3/2), with Gamma(3/4) written as
  // pi sqrt(2) / Gamma(1/4).
  add("T6b", spec_of(rs_rational, K::ZeroOneRS, 0),
      q(4) * (kPi * sqrt2() / kGammaQuarter).pow(Rational(2)) / kPi.pow(Rational(3, 2)),
      "0/1 Rudin-Shapiro: square root of the Gamma-telescoped plain product "
      "16 Gamma(3/4)^4/pi^3 over T6a");
  add("GS", spec_of("(2n+1)^2/((n+1)(4n+1))", K::PmRS, 1), sqrt2() / q(2),
      "Rudin-Shapiro: the same transformation applied to R(X) = X/(X+1)");
  return out;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::I: return "i";
    case Family::II: return "ii";
    case Family::III: return "iii";
    case Family::IV: return "iv";
  }
  return "?";
}

Family family_from_string(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "i") return Family::I;
  if (lower == "ii") return Family::II;
  if (lower == "iii") return Family::III;
  if (lower == "iv") return Family::IV;
  throw InputError("unknown family '" + std::string(text) + "' (expected i, ii, iii or iv)");
}

Rational family_value(Family id, const Rational& a, const std::optional<Rational>& b) {
  switch (id) {
    case Family::I:
      if (!b) throw InputError("family (i) needs b");
      return (*b + 1) / (a + 1);
    case Family::II: return (a + 2) / (a + 1);
    case Family::III: return Rational(1) / (a + 1);
    case Family::IV: return 2 * a / (a + 1);
  }
  return Rational(1);
}

Identity family(Family id, const Rational& a, const std::optional<Rational>& b) {
  if (id == Family::I && !b) throw InputError("family (i) needs b");
  if (id != Family::I && b) {
    throw InputError("family (" + std::string(to_string(id)) + ") fixes b; do not pass it");
  }
  if (a < 0 && boost::multiprecision::denominator(a) == 1) {
    throw InputError("a must not be a negative integer");
  }
  if (b && *b < 0 && boost::multiprecision::denominator(*b) == 1) {
    throw InputError("b must not be a negative integer");
  }
  if (id == Family::IV && (is_nonpositive_integer(a) || is_negative_half_integer(a))) {
    throw InputError("family (iv) excludes a in {0, -1, -2, ...} and {-1/2, -3/2, ...}");
  }

  std::vector<RawFactor> raw;
  switch (id) {
    case Family::I:
      raw = {lin(1, a), lin(2, a + 1), lin(2, *b), lin(2, a, -1), lin(1, *b, -1),
             lin(2, *b + 1, -1)};
      break;
    case Family::II:
      raw = {lin(1, a), lin(2, a + 1, 2), lin(2, a, -1), lin(2, a + 2, -1), lin(1, a + 1, -1)};
      break;
    case Family::III:
      raw = {lin(2, 2 * a), lin(2, a + 1), lin(2, a, -1), lin(2, Rational(1), -1)};
      break;
    case Family::IV:
      raw = {lin(2, a + 1), lin(2, 2 * a - 1), lin(2, a, -1), lin(2, 4 * a - 2, -1)};
      break;
  }
  // Factors are increasing in n, so positivity at n = 1 covers all n >= 1.
  for (const RawFactor& f : raw) {
    if (f.coefficient + f.constant <= 0) {
      throw InputError("parameters put a factor at or below zero for n = 1 "
                       "(outside the real-log domain)");
    }
  }

  Identity out;
  out.spec = ProductSpec{FactoredRational::normalize(raw), ExponentKind::PmThue, 1};
  out.closed_form = ClosedForm::rational(family_value(id, a, b));
  out.name = "C2" + std::string(to_string(id)) + "(a=" + to_string(a) +
             (b ? ",b=" + to_string(*b) : std::string()) + ")";
  out.provenance = "family (" + std::string(to_string(id)) + ") instance";
  return out;
}

const std::vector<Identity>& catalog() {
  static const std::vector<Identity> entries = build_catalog();
  return entries;
}

std::optional<Identity> find_identity(std::string_view name) {
  if (name == "C3a") name = "WR";
  for (const Identity& id : catalog()) {
    if (id.name == name) return id;
  }
  return std::nullopt;
}

VerifyReport verify(const Identity& identity, const EvalOptions& opts,
                    const std::optional<BigReal>& tolerance) {
  VerifyReport report;
  report.name = identity.name;
  const Precision p = opts.precision;
  report.computed = BigReal(p);
  report.expected = BigReal(p);
  report.abs_error = BigReal(p);
  report.error_estimate = BigReal(p);
  report.tolerance = BigReal(p);
  try {
    const EvalResult r = evaluate(identity.spec, opts);
    report.computed = r.value;
    report.error_estimate = r.error_estimate;
    report.expected = identity.closed_form.evaluate(p);
    report.abs_error = abs(BigReal(r.value) -= report.expected);
    report.tolerance = tolerance ? *tolerance : BigReal(r.error_estimate).mul(10);
    report.pass = report.abs_error <= max(report.tolerance, report.error_estimate);
  } catch (const Error& e) {
    report.failure = e.what();
    report.pass = false;
    return report;
  }

  if (identity.spec.kind == ExponentKind::PmThue) {
    SymbolicCheck check;
    const Reduction red = reduce(expr_from_spec(identity.spec));
    check.reduced = red.reduced;
    check.depth = red.depth;
    const auto expected = identity.closed_form.as_power_product();
    check.comparable = expected.has_value();
    if (red.reduced) {
      check.constant = red.constant.render();
      check.matches = check.comparable && red.constant == *expected;
      if (check.comparable && !check.matches) report.pass = false;
    }
    report.symbolic = check;
  }
  return report;
}

std::vector<VerifyReport> verify_all(const std::vector<Identity>& identities,
                                     const EvalOptions& opts,
                                     const std::optional<BigReal>& tolerance) {
  std::vector<VerifyReport> out;
  out.reserve(identities.size());
  if (!mpfr_buildopt_tls_p()) {
    for (const Identity& id : identities) out.push_back(verify(id, opts, tolerance));
    return out;
  }
  std::vector<std::future<VerifyReport>> jobs;
  jobs.reserve(identities.size());
  for (const Identity& id : identities) {
    jobs.push_back(std::async(std::launch::async,
                              [&id, &opts, &tolerance] { return verify(id, opts, tolerance); }));
  }
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

}  // namespace tmprod
