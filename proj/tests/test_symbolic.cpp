#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tmprod/catalog.hpp"
#include "tmprod/errors.hpp"
#include "tmprod/serialize.hpp"
#include "tmprod/symbolic.hpp"

using namespace tmprod;

namespace {

Rational Q(long p, long q = 1) { return Rational(p, q); }

PowerProduct pp(const Rational& q) { return PowerProduct::from_rational(q); }

const Identity& entry(const char* name) {
  for (const Identity& id : catalog()) {
    if (id.name == name) return id;
  }
  throw std::runtime_error(std::string("no catalog entry ") + name);
}

PowerProduct exact_value(const Identity& id) {
  const auto v = id.closed_form.as_power_product();
  if (!v) throw std::runtime_error("not a power product: " + id.name);
  return *v;
}

// Value of the family instance extended to n >= 0: R(0) times the family constant.
PowerProduct extended_family_value(const Identity& fam) {
  return pp(fam.spec.rational.value_at(Q(0))) * exact_value(fam);
}

FactoredRational power(const FactoredRational& r, int k) {
  FactoredRational out;
  const FactoredRational base = k < 0 ? r.inverse() : r;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

}  // namespace

TEST(GExpression, BuildAndRender) {
  GExpression e;
  e.add_g(Q(1), Q(2)).add_g(Q(1, 2), Q(-1)).add_log(Q(3), Q(1, 2));
  EXPECT_EQ(e.render(), "-G(1/2) + 2*G(1) + 1/2*log(3)");
  e.add_g(Q(1), Q(-2));
  EXPECT_EQ(e.render(), "-G(1/2) + 1/2*log(3)");
  EXPECT_EQ(GExpression().render(), "0");
  EXPECT_THROW(GExpression().add_g(Q(-2), Q(1)), InputError);
  EXPECT_THROW(GExpression().add_log(Q(0), Q(1)), InputError);
  EXPECT_EQ(parse_gexpression("2G(1) - G(1/2) + 1/2*log(3)"),
            GExpression().add_g(Q(1), Q(2)).add_g(Q(1, 2), Q(-1)).add_log(Q(3), Q(1, 2)));
  EXPECT_THROW(parse_gexpression("2G(1"), ParseError);
  EXPECT_THROW(parse_gexpression("H(1)"), ParseError);
  EXPECT_THROW(parse_gexpression("G(-3)"), ParseError);
}

TEST(ExprFromSpec, Examples) {
  const FactoredRational r = FactoredRational::normalize(
      std::vector<RawFactor>{{Q(1), Q(1, 3), 1}, {Q(1), Q(5, 7), -1}});
  EXPECT_EQ(expr_from_spec({r, ExponentKind::PmThue, 1}),
            GExpression().add_g(Q(1, 3), Q(1)).add_g(Q(5, 7), Q(-1)));
  EXPECT_TRUE(expr_from_spec({FactoredRational(), ExponentKind::PmThue, 1}).empty());
  // Family (i) left side.
  const Rational a = Q(3, 5), b = Q(7, 4);
  GExpression expected;
  expected.add_g(a, Q(1)).add_g(a / 2, Q(-1)).add_g((a + 1) / 2, Q(1));
  expected.add_g(b, Q(-1)).add_g(b / 2, Q(1)).add_g((b + 1) / 2, Q(-1));
  EXPECT_EQ(expr_from_spec(family(Family::I, a, b).spec), expected);
  // Start 0 moves R(0) into the constants.
  EXPECT_EQ(expr_from_spec({parse_factored("(2n+1)/(2n+2)"), ExponentKind::PmThue, 0}),
            GExpression().add_g(Q(1, 2), Q(1)).add_g(Q(1), Q(-1)).add_log(Q(1, 2), Q(1)));
  EXPECT_THROW(expr_from_spec({r, ExponentKind::PmRS, 1}), InputError);
  EXPECT_THROW(expr_from_spec({parse_factored("(2n+1)/(3n+2)"), ExponentKind::PmThue, 1}),
               InputError);
}

TEST(ExprFromSpec, RespectsMultiplication) {
  const FactoredRational a = parse_factored("(n+1/3)(n+2)/((n+5/7)(n+8/5))");
  const FactoredRational b = parse_factored("(n+5/7)/(n+1/9)");
  EXPECT_EQ(expr_from_spec({a * b, ExponentKind::PmThue, 1}),
            expr_from_spec({a, ExponentKind::PmThue, 1}) + expr_from_spec({b, ExponentKind::PmThue, 1}));
}

TEST(Reduce, TheoremTwoValues) {
  const Reduction two_g1 = reduce(GExpression().add_g(Q(1), Q(2)));
  ASSERT_TRUE(two_g1.reduced);
  EXPECT_EQ(two_g1.constant, pp(Q(1, 2)));
  const Reduction g_half = reduce(GExpression().add_g(Q(1, 2), Q(1)));
  ASSERT_TRUE(g_half.reduced);
  EXPECT_TRUE(g_half.constant.is_one());
  EXPECT_EQ(g_half.certificate, (std::map<Rational, Rational>{{Q(0), Q(-1)}}));
}

TEST(Reduce, CertificateReproducesExpression) {
  const GExpression target = expr_from_spec(family(Family::I, Q(3, 7), Q(11, 5)).spec);
  const Reduction red = reduce(target);
  ASSERT_TRUE(red.reduced);
  GExpression rebuilt;
  for (const auto& [x, lambda] : red.certificate) rebuilt += relation(x).scaled(lambda);
  // rebuilt = target - log(constant) in the g-algebra: compare the G parts.
  EXPECT_EQ(rebuilt.terms(), target.terms());
  EXPECT_EQ(rebuilt.constant_part().pow(Q(-1)), red.constant);
}

TEST(Reduce, FamilyExamples) {
  EXPECT_EQ(reduce(expr_from_spec(family(Family::I, Q(1), Q(2)).spec)).constant, pp(Q(3, 2)));
  EXPECT_EQ(exact_value(family(Family::III, Q(1, 2))), pp(Q(2, 3)));
  EXPECT_EQ(reduce(expr_from_spec(family(Family::II, Q(0)).spec)).constant, pp(Q(2)));
  EXPECT_EQ(reduce(expr_from_spec(family(Family::IV, Q(3, 4)).spec)).constant, pp(Q(6, 7)));
}

TEST(Reduce, IrreducibleIsAResult) {
  const Reduction g0 = reduce(GExpression().add_g(Q(0), Q(1)));
  EXPECT_FALSE(g0.reduced);
  EXPECT_EQ(g0.depth, kDefaultReduceDepth);
  EXPECT_EQ(g0.residual.render(), "G(0)");
  EXPECT_TRUE(reduce(GExpression()).reduced);
}

TEST(Reduce, RelationInvariance) {
  const GExpression base = expr_from_spec(family(Family::I, Q(2, 3), Q(5, 4)).spec);
  const Reduction r0 = reduce(base);
  ASSERT_TRUE(r0.reduced);
  for (const Rational& x : {Q(2, 3), Q(1, 3), Q(5, 8), Q(5, 4)}) {
    const Reduction r1 = reduce(base + relation(x));
    ASSERT_TRUE(r1.reduced) << to_string(x);
    EXPECT_EQ(r1.constant, r0.constant) << to_string(x);
  }
  const Reduction irr = reduce(GExpression().add_g(Q(0), Q(1)) + relation(Q(0)));
  EXPECT_FALSE(irr.reduced);
}

TEST(Reduce, RandomFamilyInstancesSoundAndExact) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
  std::uniform_int_distribution<int> fam(0, 3);
  int checked = 0, numeric = 0;
  while (checked < 50) {
    const Family f = static_cast<Family>(fam(rng));
    const Rational a = Q(num(rng), den(rng));
    const std::optional<Rational> b =
        f == Family::I ? std::optional<Rational>(Q(num(rng), den(rng))) : std::nullopt;
    Identity id;
    try {
      id = family(f, a, b);
    } catch (const InputError&) {
      continue;
    }
    const Reduction red = reduce(expr_from_spec(id.spec));
    ASSERT_TRUE(red.reduced) << id.name;
    EXPECT_EQ(red.constant, pp(family_value(f, a, b))) << id.name;
    if (numeric < 10) {  // soundness against the evaluator on a subset
      const EvalResult r = evaluate(id.spec, {});
      EXPECT_LE(oracle::distance(r.value, red.constant.evaluate(Precision{60})),
                r.error_estimate.to_double())
          << id.name;
      ++numeric;
    }
    ++checked;
  }
}

TEST(Family, ParameterRestrictions) {
  EXPECT_THROW(family(Family::I, Q(1)), InputError);
  EXPECT_THROW(family(Family::II, Q(1), Q(2)), InputError);
  EXPECT_THROW(family(Family::I, Q(-2), Q(1)), InputError);
  EXPECT_THROW(family(Family::IV, Q(0)), InputError);
  EXPECT_THROW(family(Family::IV, Q(-1, 2)), InputError);
  EXPECT_THROW(family(Family::IV, Q(-1, 4)), InputError);  // factor 2n+4a-2 <= 0 at n = 1
  EXPECT_THROW(family(Family::I, Q(-3, 2), Q(1)), InputError);
  EXPECT_EQ(family_from_string("III"), Family::III);
  EXPECT_THROW(family_from_string("v"), InputError);
}

TEST(Catalog, EighteenEntriesWithAlias) {
  EXPECT_EQ(catalog().size(), 18u);
  ASSERT_TRUE(find_identity("C3a"));
  EXPECT_EQ(find_identity("C3a")->name, "WR");
  EXPECT_FALSE(find_identity("C3z"));
  const Identity& wr = entry("WR");
  EXPECT_EQ(wr.spec.rational, parse_factored("(2n+1)/(2n+2)"));
  EXPECT_EQ(wr.spec.start, 0);
  EXPECT_EQ(wr.closed_form.render(), "2^(-1/2)");
  EXPECT_EQ(entry("C3c").spec.start, 1);
  EXPECT_EQ(entry("C3l").spec.rational, parse_factored("(8n+1)(8n+7)/((8n+3)(8n+5))"));
  EXPECT_EQ(entry("T6b").spec.kind, ExponentKind::ZeroOneRS);
  EXPECT_EQ(entry("GS").spec.start, 1);
}

TEST(Catalog, RenderedRationalsRoundTrip) {
  for (const Identity& id : catalog()) {
    EXPECT_EQ(parse_factored(id.spec.rational.render()), id.spec.rational) << id.name;
    EXPECT_NO_THROW(validate(id.spec)) << id.name;
  }
}

TEST(Catalog, ClosedFormsMatchIndependentValues) {
  const std::map<std::string, const char*> values{
      {"T5a", "0.92044178783559098393491713074999098122949892020915"},
      {"T5b", "1.41421356237309504880168872420969807856967187537694"},
      {"T5c", "0.91017972112445468260871551564493713924038075696630"},
      {"T6b", "1.0787052023767587133358714447111054655317379308861"},
      {"GS", "0.70710678118654752440084436210484903928483593768847"},
      {"C3i", "0.35355339059327376220042218105242451964241796884424"}};
  for (const auto& [name, value] : values) {
    EXPECT_LT(oracle::distance(entry(name.c_str()).closed_form.evaluate(Precision{50}), value), 1e-48)
        << name;
  }
}

TEST(Catalog, ProvenanceRederivations) {
  // Each line: entry = (family instance over n >= 0)^s * (another entry)^k, as
  // rational functions and as exact values.
  struct Case {
    const char* name;
    Identity fam;
    int s;
    const char* other;
    int k;
  };
  const Case cases[] = {
      {"C3b", family(Family::III, Q(1, 2)), -1, "WR", 0},
      {"C3c", family(Family::III, Q(-1, 2)), 1, "WR", 0},
      {"C3d", family(Family::I, Q(1), Q(2)), 1, "WR", 2},
      {"C3e", family(Family::I, Q(1), Q(3, 2)), 1, "WR", 1},
      {"C3f", family(Family::I, Q(2), Q(3, 2)), -1, "WR", 0},
      {"C3g", family(Family::II, Q(1)), 1, "WR", 1},
      {"C3k", family(Family::IV, Q(3, 4)), 1, "WR", 0},
      {"C3l", family(Family::I, Q(3, 4), Q(1, 4)), 1, "C3b", 1},
  };
  for (const Case& c : cases) {
    const Identity& target = entry(c.name);
    const Identity& other = entry(c.other);
    EXPECT_EQ(target.spec.rational, power(c.fam.spec.rational, c.s) * power(other.spec.rational, c.k))
        << c.name;
    const PowerProduct fam_value =
        target.spec.start == 0 ? extended_family_value(c.fam) : exact_value(c.fam);
    EXPECT_EQ(exact_value(target), fam_value.pow(Q(c.s)) * exact_value(other).pow(Q(c.k))) << c.name;
  }
  // Products and quotients among entries.
  auto combo = [](const char* x, const char* y, int sign) {
    return std::make_pair(entry(x).spec.rational * power(entry(y).spec.rational, sign),
                          exact_value(entry(x)) * exact_value(entry(y)).pow(Q(sign)));
  };
  const auto g = combo("C3e", "C3f", 1);
  EXPECT_EQ(g.first, entry("C3g").spec.rational);
  EXPECT_EQ(g.second, exact_value(entry("C3g")));
  const auto h = combo("C3f", "C3b", -1);
  EXPECT_EQ(h.first, entry("C3h").spec.rational);
  EXPECT_EQ(h.second, exact_value(entry("C3h")));
  const auto i = combo("C3g", "C3h", -1);
  EXPECT_EQ(i.first, entry("C3i").spec.rational);
  EXPECT_EQ(i.second, exact_value(entry("C3i")));
  const auto j = combo("C3i", "WR", 1);
  EXPECT_EQ(j.first, entry("C3j").spec.rational);
  EXPECT_EQ(j.second, exact_value(entry("C3j")));
}

TEST(Catalog, SymbolicReductionOfEveryThueEntry) {
  for (const Identity& id : catalog()) {
    if (id.spec.kind != ExponentKind::PmThue) continue;
    const Reduction red = reduce(expr_from_spec(id.spec));
    ASSERT_TRUE(red.reduced) << id.name;
    EXPECT_LE(red.depth, 3) << id.name;
    EXPECT_EQ(red.constant, exact_value(id)) << id.name;
  }
}

TEST(Verify, ReportsPassAndFailure) {
  const VerifyReport wr = verify(entry("WR"), {});
  EXPECT_TRUE(wr.pass);
  EXPECT_LT(wr.abs_error.to_double(), 1e-30);
  ASSERT_TRUE(wr.symbolic);
  EXPECT_TRUE(wr.symbolic->matches);
  const VerifyReport f = verify(entry("C3f"), {});
  EXPECT_TRUE(f.pass);
  EXPECT_LT(oracle::distance(f.computed, "1"), 1e-30);

  Identity wrong = entry("C3b");
  wrong.closed_form = ClosedForm::rational(Q(1, 3));
  const VerifyReport bad = verify(wrong, {});
  EXPECT_FALSE(bad.pass);
  ASSERT_TRUE(bad.symbolic);
  EXPECT_FALSE(bad.symbolic->matches);

  Identity broken = entry("WR");
  broken.spec.rational = parse_factored("(2n+1)/(3n+2)");
  const VerifyReport err = verify(broken, {});
  EXPECT_FALSE(err.pass);
  EXPECT_FALSE(err.failure.empty());
}

TEST(Serialize, ClosedFormAndIdentityRoundTrip) {
  for (const Identity& id : catalog()) {
    const nlohmann::json j = to_json(id);
    const Identity back = identity_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.name, id.name);
    EXPECT_EQ(back.spec.rational, id.spec.rational);
    EXPECT_EQ(back.spec.kind, id.spec.kind);
    EXPECT_EQ(back.spec.start, id.spec.start);
    EXPECT_EQ(back.closed_form.render(), id.closed_form.render());
    EXPECT_EQ(to_json(back), j);
  }
  EXPECT_THROW(closed_form_from_json(nlohmann::json{{"type", "weird"}}), InputError);
  EXPECT_THROW(closed_form_from_json(nlohmann::json{{"type", "rational"}, {"value", "x"}}), InputError);
}
