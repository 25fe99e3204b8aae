// Acceptance suite: one line per criterion, PASS / FAIL / DEVIATION.
// DEVIATION marks a criterion whose stated reference value is itself wrong;
// the line shows both the literal check (failing) and the corrected one.
// Exit status is nonzero on any FAIL, and with --strict also on DEVIATION.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tmprod/analysis.hpp"
#include "tmprod/catalog.hpp"
#include "tmprod/errors.hpp"
#include "tmprod/numerics.hpp"
#include "tmprod/sequences.hpp"
#include "tmprod/symbolic.hpp"

using namespace tmprod;

namespace {

enum class Status { Pass, Fail, Deviation };

struct Line {
  Status status;
  std::string detail;
};

Rational Q(long p, long q = 1) { return Rational(p, q); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Timed {
  VerifyReport report;
  double seconds;
};

// Every catalog entry verified once, sequentially, at default options.
std::map<std::string, Timed> verify_catalog() {
  std::map<std::string, Timed> out;
  for (const Identity& id : catalog()) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport r = verify(id, EvalOptions{});
    out.emplace(id.name, Timed{std::move(r), seconds_since(t0)});
  }
  return out;
}

double err(const VerifyReport& r) { return r.failure.empty() ? r.abs_error.to_double() : INFINITY; }

Line criterion1(const std::map<std::string, Timed>& v) {
  const Timed& wr = v.at("WR");
  const bool ok = wr.report.pass && err(wr.report) <= 1e-30 && wr.seconds < 5.0;
  return {ok ? Status::Pass : Status::Fail,
          "Woods-Robbins |eval - 2^(-1/2)| = " + sci(err(wr.report)) + " (<= 1e-30), " +
              secs(wr.seconds) + " (< 5 s)"};
}

Line criterion2(const std::map<std::string, Timed>& v) {
  const char* names[] = {"WR", "C3b", "C3c", "C3d", "C3e", "C3f",
                         "C3g", "C3h", "C3i", "C3j", "C3k", "C3l"};
  double worst = 0, total = 0;
  int passed = 0;
  for (const char* n : names) {
    const Timed& t = v.at(n);
    worst = std::max(worst, err(t.report));
    total += t.seconds;
    if (t.report.pass && err(t.report) <= 1e-25) ++passed;
  }
  const bool ok = passed == 12 && total < 60.0;
  return {ok ? Status::Pass : Status::Fail,
          "identities (a)-(l): " + std::to_string(passed) + "/12 pass, max abs_error " +
              sci(worst) + " (<= 1e-25), " + secs(total) + " (< 60 s)"};
}

Line criterion3(const std::map<std::string, Timed>& v) {
  double worst = 0;
  bool ok = true;
  for (const char* n : {"T5a", "T5b", "T5c"}) {
    worst = std::max(worst, err(v.at(n).report));
    ok = ok && v.at(n).report.pass && err(v.at(n).report) <= 1e-20;
  }
  return {ok ? Status::Pass : Status::Fail,
          "0/1 Thue-Morse products vs pi^(3/4)sqrt2/Gamma(1/4), sqrt2, sqrt(2sqrt2-2): max abs_error " +
              sci(worst) + " (<= 1e-20)"};
}

Line criterion4(const std::map<std::string, Timed>& v) {
  const Precision p{60};
  const VerifyReport& t6a = v.at("T6a").report;
  const VerifyReport& t6b = v.at("T6b").report;
  const VerifyReport& gs = v.at("GS").report;
  const double seconds = v.at("T6a").seconds + v.at("T6b").seconds + v.at("GS").seconds;

  // The stated constant 16 Gamma(3/4)^4 / pi^6, built directly from Gamma(3/4).
  const BigReal g34 = gamma(Q(3, 4), p);
  BigReal stated = g34 * g34 * g34 * g34;
  stated.mul(16);
  stated /= pow(pi(p), Q(6));
  const double literal_error = oracle::distance(t6b.computed, stated);
  // The catalog's corrected constant 4 Gamma(3/4)^2 / pi^(3/2).
  const double corrected_error = err(t6b);

  const bool t6a_ok = t6a.pass && err(t6a) <= 1e-8;
  const bool gs_ok = gs.pass && err(gs) <= 1e-6;
  const bool time_ok = seconds < 120.0;
  const bool literal_ok = literal_error <= 1e-6;
  const bool corrected_ok = t6b.pass && corrected_error <= 1e-6;

  std::ostringstream d;
  d << "Rudin-Shapiro at N=10^6: |T6a - 1| = " << sci(err(t6a)) << " (<= 1e-8); T6b vs stated "
    << "16Gamma(3/4)^4/pi^6 off by " << sci(literal_error) << (literal_ok ? " (ok)" : " (FAILS 1e-6)")
    << ", vs corrected 4Gamma(3/4)^2/pi^(3/2) " << sci(corrected_error) << " (<= 1e-6); "
    << "Golay-Shapiro |GS - sqrt2/2| = " << sci(err(gs)) << " (<= 1e-6); " << secs(seconds)
    << " (< 120 s)";
  Status s = Status::Fail;
  if (t6a_ok && gs_ok && time_ok && literal_ok) s = Status::Pass;
  else if (t6a_ok && gs_ok && time_ok && corrected_ok) s = Status::Deviation;
  return {s, d.str()};
}

Line criterion5() {
  const double e_half = oracle::distance(g_value(Q(1, 2), {}).value, "1");
  const double e_one = oracle::distance(
      g_value(Q(1), {}).value, "0.707106781186547524400844362104849039284835937688474036588339869");
  const bool ok = e_half <= 1e-30 && e_one <= 1e-30;
  return {ok ? Status::Pass : Status::Fail,
          "|g(1/2) - 1| = " + sci(e_half) + ", |g(1) - sqrt2/2| = " + sci(e_one) + " (<= 1e-30)"};
}

Line criterion6() {
  const FlajoletMartin fm = flajolet_martin({});
  const double cross = oracle::distance(fm.product, "1.5");
  const double rel = oracle::distance(fm.phi, fm.phi_via_g0) / fm.phi.to_double();
  const bool ok = cross <= 1e-20 && rel <= 1e-20;
  return {ok ? Status::Pass : Status::Fail,
          "|R*g(0) - 3/2| = " + sci(cross) + " (<= 1e-20); phi formulas relative difference " +
              sci(rel) + " (<= 1e-20), phi = " + fm.phi.to_string(25)};
}

Line criterion7() {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
  std::uniform_int_distribution<int> fam(0, 3);
  int exact = 0, tried = 0;
  std::string first_bad;
  while (tried < 50) {
    const Family f = static_cast<Family>(fam(rng));
    const Rational a = Q(num(rng), den(rng));
    const std::optional<Rational> b =
        f == Family::I ? std::optional<Rational>(Q(num(rng), den(rng))) : std::nullopt;
    Identity id;
    try {
      id = family(f, a, b);
    } catch (const InputError&) {
      continue;  // not admissible
    }
    ++tried;
    const Reduction red = reduce(expr_from_spec(id.spec));
    if (red.reduced && red.constant == PowerProduct::from_rational(family_value(f, a, b))) {
      ++exact;
    } else if (first_bad.empty()) {
      first_bad = id.name;
    }
  }
  const Reduction g1 = reduce(GExpression().add_g(Q(1), Q(2)));
  const Reduction gh = reduce(GExpression().add_g(Q(1, 2), Q(1)));
  const bool fixed_ok = g1.reduced && g1.constant == PowerProduct::from_rational(Q(1, 2)) &&
                        gh.reduced && gh.constant.is_one();
  const bool ok = exact == 50 && fixed_ok;
  return {ok ? Status::Pass : Status::Fail,
          "reduce exact on " + std::to_string(exact) + "/50 random family instances" +
              (first_bad.empty() ? "" : " (first miss " + first_bad + ")") +
              "; reduce(2G(1)) = " + (g1.reduced ? g1.constant.render() : "irreducible") +
              ", reduce(G(1/2)) = " + (gh.reduced ? gh.constant.render() : "irreducible")};
}

double eval_double(const FactoredRational& r, double n) {
  double v = r.scale().convert_to<double>();
  for (const auto& f : r.factors()) v *= std::pow(n + f.offset.convert_to<double>(), f.multiplicity);
  return v;
}

Line criterion8() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> count(1, 3), num(1, 32), coef(1, 4), start_d(0, 1);
  int naive_ok = 0, bounded = 0;
  double worst_naive = 0;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<RawFactor> raw;
    Rational scale = 1;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      const int c1 = coef(rng), c2 = coef(rng);
      raw.push_back(RawFactor{Q(c1), Q(num(rng), 8) * c1, 1});
      raw.push_back(RawFactor{Q(c2), Q(num(rng), 8) * c2, -1});
      scale *= Q(c2, c1);
    }
    const FactoredRational r = FactoredRational::normalize(raw, scale);
    const std::int64_t start = start_d(rng);
    const ProductSpec spec{r, ExponentKind::PmThue, start};

    const EvalResult fast = eval_pm_thue(spec, {});
    EvalOptions ref_opts;
    ref_opts.split_levels = 10;
    ref_opts.terms = 1 << 13;
    const EvalResult ref = eval_pm_thue(spec, ref_opts);
    const double naive = oracle::naive_product(
        [&](std::int64_t n) { return eval_double(r, static_cast<double>(n)); },
        [](std::int64_t n) { return oracle::thue_morse(n) ? -1 : 1; }, start, 100000);
    const double dn = std::fabs(fast.value.to_double() - naive);
    worst_naive = std::max(worst_naive, dn);
    if (dn <= 1e-3) ++naive_ok;
    if (oracle::distance(fast.value, ref.value) <= fast.error_estimate.to_double()) ++bounded;
  }
  const bool ok = naive_ok == 25 && bounded * 100 >= 95 * 25;
  return {ok ? Status::Pass : Status::Fail,
          "25 random rationals: naive N=10^5 agreement " + std::to_string(naive_ok) +
              "/25 (max " + sci(worst_naive) + ", <= 1e-3); error_estimate bounds deviation from " +
              "L=10, N=2^13 reference in " + std::to_string(bounded) + "/25 (>= 95%)"};
}

Line criterion9() {
  bool ok = true;
  std::string where;
  for (std::uint64_t n = 0; n < (1u << 20) && ok; ++n) {
    if (thue_morse(2 * n) != thue_morse(n) || thue_morse(2 * n + 1) != 1 - thue_morse(n)) {
      ok = false;
      where = "t at n=" + std::to_string(n);
    }
  }
  for (std::uint64_t n = 0; n < (1u << 18) && ok; ++n) {
    if (rudin_shapiro(2 * n) != rudin_shapiro(n) || rudin_shapiro(4 * n + 1) != rudin_shapiro(n) ||
        rudin_shapiro(4 * n + 3) != 1 - rudin_shapiro(2 * n + 1)) {
      ok = false;
      where = "v at n=" + std::to_string(n);
    }
  }
  const DigitWord one = parse_digit_word("1", 2), eleven = parse_digit_word("11", 2);
  for (std::uint64_t n = 0; n < (1u << 12) && ok; ++n) {
    if (block_parity(one, 2, n) != thue_morse(n) || block_parity(eleven, 2, n) != rudin_shapiro(n) ||
        static_cast<int>(thue_morse(n)) != oracle::thue_morse(n) ||
        static_cast<int>(rudin_shapiro(n)) != oracle::rudin_shapiro(n)) {
      ok = false;
      where = "block parity at n=" + std::to_string(n);
    }
  }
  return {ok ? Status::Pass : Status::Fail,
          ok ? "t recurrences to 2^20, v recurrences to 2^18, block parity and string definitions to 2^12"
             : "recurrence broken: " + where};
}

Line criterion10() {
  int total = 0, matching = 0;
  for (const auto& [a, b] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}}) {
    for (int k = 0; k <= 2; ++k) {
      for (const RemainderSign& r : remainder_sign_probe(Q(a), Q(b), k, 64, 1 << 20)) {
        ++total;
        if (r.sign == r.expected) ++matching;
      }
    }
  }
  return {matching == total ? Status::Pass : Status::Fail,
          "remainder signs equal (-1)^t_n for (a,b) in {(2,1),(3,1)}, k in {0,1,2}, n <= 64, "
          "N_tail = 2^20: " + std::to_string(matching) + "/" + std::to_string(total)};
}

Line criterion11() {
  const ScanReport report = monotonicity_scan(Q(0), Q(10), 40, {});
  double min_gap_ratio = INFINITY;
  for (std::size_t i = 0; i + 1 < report.points.size(); ++i) {
    BigReal drop = report.points[i].h.value;
    drop -= report.points[i + 1].h.value;
    const double budget = report.points[i].h.error_estimate.to_double() +
                          report.points[i + 1].h.error_estimate.to_double();
    min_gap_ratio = std::min(min_gap_ratio, drop.to_double() / budget);
  }
  const bool ok = report.points.size() == 41 && report.strictly_decreasing();
  return {ok ? Status::Pass : Status::Fail,
          "h(x) = f(x/2,(x+1)/2) on x = 0, 0.25, ..., 10: " +
              std::to_string(report.points.size()) + " points, " +
              std::to_string(report.violations.size()) +
              " non-decreases; smallest drop / combined error = " + sci(min_gap_ratio)};
}

Line criterion12(const std::map<std::string, Timed>& v, Status t6b_status) {
  int passed = 0;
  for (const auto& [name, t] : v) passed += t.report.pass ? 1 : 0;
  const EvalOptions d;
  const bool full_scale = d.precision.digits == 60 && d.split_levels == 8 && d.thue_terms() == 4096 &&
                          d.rs_terms() == 1000000;
  const bool all = passed == static_cast<int>(v.size()) && v.size() == 18 && full_scale;
  std::string detail = "full catalog at full-scale defaults (P=60, L=8, N=4096 / 10^6): " +
                       std::to_string(passed) + "/" + std::to_string(v.size()) + " pass";
  if (!all) return {Status::Fail, detail};
  if (t6b_status == Status::Deviation) {
    return {Status::Deviation, detail + "; T6b reproduced against the corrected constant only (see 4)"};
  }
  return {Status::Pass, detail};
}

const char* label(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Deviation: return "DEVIATION";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const auto t0 = std::chrono::steady_clock::now();
  int failures = 0, deviations = 0;
  auto emit = [&](int number, const std::function<Line()>& run) {
    Line line;
    try {
      line = run();
    } catch (const std::exception& e) {
      line = {Status::Fail, std::string("exception: ") + e.what()};
    }
    if (line.status == Status::Fail) ++failures;
    if (line.status == Status::Deviation) ++deviations;
    std::printf("[%s] criterion %d: %s\n", label(line.status), number, line.detail.c_str());
    std::fflush(stdout);
    return line.status;
  };

  const std::map<std::string, Timed> verified = verify_catalog();
  emit(1, [&] { return criterion1(verified); });
  emit(2, [&] { return criterion2(verified); });
  emit(3, [&] { return criterion3(verified); });
  const Status s4 = emit(4, [&] { return criterion4(verified); });
  emit(5, criterion5);
  emit(6, criterion6);
  emit(7, criterion7);
  emit(8, criterion8);
  emit(9, criterion9);
  emit(10, criterion10);
  emit(11, criterion11);
  emit(12, [&] { return criterion12(verified, s4); });

  std::printf("acceptance: %d fail, %d deviation, %.1f s total%s\n", failures, deviations,
              seconds_since(t0), strict ? " (strict)" : "");
  return failures > 0 || (strict && deviations > 0) ? 1 : 0;
}
