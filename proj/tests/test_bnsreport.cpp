#include <gtest/gtest.h>

#include "troplex/bnsreport.hpp"

using namespace troplex;

namespace {

const auto ZZ = CoefficientRing::integers();
const auto QQ = CoefficientRing::rationals();

const char* kRelator = "x1^-1 x2^-1 x1 x2^2 x1^-1 x2^-1 x1^2 x2^-1 x1^-1 x2 x1^-1 x2 x1 x2^-1";

Presentation one_relator() {
  Presentation base = Presentation::with_default_names(2, {});
  return Presentation::with_default_names(2, {base.parse_word(kRelator)});
}

Presentation torus() {
  Presentation base = Presentation::with_default_names(2, {});
  return Presentation::with_default_names(2, {base.parse_word("x1 x2 x1^-1 x2^-1")});
}

RatMatrix mat2(long a, long b, long c, long d) { return {2, {a, b, c, d}}; }
Representation s3_rep(CoefficientRing r = ZZ) { return {r, 2, {mat2(-1, 1, -1, 0), mat2(0, 1, 1, 0)}}; }

Direction D(long x, long y) { return Direction::of(Rational(x), Rational(y)); }

BoundReport bound(const Presentation& p, std::vector<BoundInput> in) {
  return assemble_bound("test", p, EpimorphismToFreeAbelian::from_abelianization(p), in);
}

BoundInput twisted(const std::string& v = "Z") { return {"s3", s3_rep(), CoefficientSetting::parse(v)}; }
BoundInput untwisted(const std::string& v = "Z") {
  return {"trivial", Representation::trivial(ZZ, 2), CoefficientSetting::parse(v)};
}

}  // namespace

TEST(CoefficientSetting, ParseAndPrint) {
  for (const char* s : {"Z", "trivial", "p-adic:3", "fp:2"}) EXPECT_EQ(CoefficientSetting::parse(s).str(), s);
  EXPECT_THROW(CoefficientSetting::parse("p-adic:4"), AlgebraError);
  EXPECT_THROW(CoefficientSetting::parse("fp:"), AlgebraError);
  EXPECT_THROW(CoefficientSetting::parse("fp:3x"), AlgebraError);
  EXPECT_THROW(CoefficientSetting::parse("real"), AlgebraError);
}

TEST(Bound, TwistedEqualsBrownArcs) {
  auto r = bound(one_relator(), {twisted()});
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_FALSE(r.vacuous);
  auto want_s = SphereArcSet::arc(D(-1, -1), D(1, 0)).unite(SphereArcSet::point(2, D(0, 1)));
  EXPECT_EQ(r.combined, want_s);
  auto fx = fixture_by_name("brown_ex54");
  auto c = compare_fixture(r, fx);
  EXPECT_EQ(c.kind, Comparison::Kind::Equal);
  EXPECT_TRUE(c.difference.is_empty());
  // J1 carries the quadric, J0 nothing of codimension one
  const auto& e = r.entries[0];
  ASSERT_EQ(e.degrees.size(), 2u);
  EXPECT_TRUE(is_unit(*e.degrees[0].gcd));
  EXPECT_TRUE(are_associates(*e.degrees[1].gcd, parse_laurent("(1 - t1)^2 - 3*t2^2", ZZ, 2)));
  EXPECT_EQ(e.admissibility.condition, 'c');
}

TEST(Bound, UntwistedIsWeaker) {
  auto r = bound(one_relator(), {untwisted()});
  EXPECT_EQ(r.combined, SphereArcSet::point(2, D(0, 1)).unite(SphereArcSet::point(2, D(0, -1))));
  auto c = compare_fixture(r, fixture_by_name("brown_ex54"));
  EXPECT_EQ(c.kind, Comparison::Kind::BoundWeaker);
  // the extra part of the bound: the closed lower arc minus its bottom point
  auto extra = SphereArcSet::arc(D(-1, -1), D(1, 0)).minus(SphereArcSet::point(2, D(0, -1)));
  EXPECT_EQ(c.difference, extra);
}

TEST(Bound, TwistedEntryIsTheImprovement) {
  auto both = bound(one_relator(), {untwisted(), twisted()});
  ASSERT_EQ(both.entries.size(), 2u);
  EXPECT_FALSE(both.entries[0].essential);
  EXPECT_TRUE(both.entries[1].essential);
  EXPECT_EQ(compare_fixture(both, fixture_by_name("brown_ex54")).kind, Comparison::Kind::Equal);
}

TEST(Bound, FieldSettingsStayAboveZ) {
  // each field entry alone gives a valid but weaker bound
  auto fx = fixture_by_name("brown_ex54");
  for (const char* v : {"trivial", "p-adic:2", "p-adic:3", "fp:2", "fp:3"}) {
    auto r = bound(one_relator(), {twisted(v)});
    ASSERT_EQ(r.entries.size(), 1u) << v;
    EXPECT_NE(compare_fixture(r, fx).kind, Comparison::Kind::Violation) << v;
  }
  auto all = bound(one_relator(), {twisted("trivial"), twisted("p-adic:2"), twisted("fp:2"), twisted("p-adic:3"),
                                   twisted("fp:3")});
  EXPECT_EQ(compare_fixture(all, fx).kind, Comparison::Kind::Equal);
  auto mod3 = bound(one_relator(), {twisted("fp:3")});
  EXPECT_EQ(mod3.combined, SphereArcSet::point(2, D(0, 1)).unite(SphereArcSet::point(2, D(0, -1))));
}

TEST(Bound, Monotonicity) {
  std::vector<BoundInput> pool{untwisted(), twisted("trivial"), twisted("fp:3"), twisted("p-adic:3"), twisted()};
  SphereArcSet prev = SphereArcSet::full(2);
  std::vector<BoundInput> acc;
  for (const auto& in : pool) {
    acc.push_back(in);
    auto r = bound(one_relator(), acc);
    EXPECT_TRUE(r.complement.subset_of(prev));
    EXPECT_EQ(r.complement, r.combined.complement());
    prev = r.complement;
  }
}

TEST(Bound, FreeAbelianIsFullCircle) {
  auto r = bound(torus(), {{"trivial", Representation::trivial(ZZ, 2), CoefficientSetting::parse("Z")},
                           {"trivial", Representation::trivial(QQ, 2), CoefficientSetting::parse("trivial")}});
  EXPECT_TRUE(r.combined.is_empty());
  EXPECT_TRUE(r.complement.is_full());
  for (const auto& e : r.entries)
    for (const auto& d : e.degrees) EXPECT_FALSE(d.notes.empty());
  EXPECT_EQ(compare_fixture(r, fixture_by_name("z2")).kind, Comparison::Kind::Equal);
}

TEST(Bound, SurfaceGroupHasEmptyBound) {
  Presentation p = build_orbifold_presentation(2, {});
  auto r = bound(p, {{"trivial", Representation::trivial(ZZ, p.ngens()), CoefficientSetting::parse("Z")}});
  EXPECT_EQ(r.nvars, 4u);
  EXPECT_TRUE(r.combined.is_full());
  EXPECT_TRUE(r.complement.is_empty());
  EXPECT_EQ(compare_fixture(r, fixture_by_name("surface_g2")).kind, Comparison::Kind::Equal);
}

TEST(Bound, VacuousAndExcluded) {
  // an entry failing every sufficient condition is listed but does not contribute
  Representation bad(QQ, 2, {RatMatrix{2, {Rational(3), 0, 0, Rational(1, 3)}}, mat2(1, 0, 0, 1)});
  auto r = bound(one_relator(), {{"bad", bad, CoefficientSetting::parse("p-adic:3")}});
  EXPECT_TRUE(r.vacuous);
  ASSERT_EQ(r.excluded.size(), 1u);
  EXPECT_TRUE(r.complement.is_full());
  EXPECT_NE(summary(r).find("bound: vacuous"), std::string::npos);
  auto z = bound(one_relator(), {{"bad", bad, CoefficientSetting::parse("Z")}});
  EXPECT_TRUE(z.vacuous);
  // the same matrices are fine under the trivial valuation
  auto ok = bound(one_relator(), {{"bad", bad, CoefficientSetting::parse("trivial")}});
  EXPECT_FALSE(ok.vacuous);
}

TEST(Compare, Relations) {
  auto s = SphereArcSet::arc(D(1, 0), D(0, 1), false, false);
  EXPECT_EQ(compare_fixture(s, s).kind, Comparison::Kind::Equal);
  auto bigger = SphereArcSet::arc(D(1, 0), D(-1, 0));
  auto c = compare_fixture(bigger, s);
  EXPECT_EQ(c.kind, Comparison::Kind::BoundWeaker);
  EXPECT_EQ(c.difference, bigger.minus(s));
  auto v = compare_fixture(s, bigger);
  EXPECT_EQ(v.kind, Comparison::Kind::Violation);
  EXPECT_EQ(v.difference, bigger.minus(s));
  EXPECT_THROW(compare_fixture(s, SphereArcSet::empty(4)), AlgebraError);
  for (const auto& f : builtin_fixtures()) EXPECT_FALSE(f.citation.empty());
  EXPECT_THROW(fixture_by_name("nope"), AlgebraError);
}

TEST(Bound, SummaryPrintsDirectionsAndDegrees) {
  auto r = bound(one_relator(), {twisted()});
  std::string s = summary(r);
  EXPECT_NE(s.find("bound: ((1,0),(-1,-1)) \\ (0,1)"), std::string::npos) << s;
  EXPECT_NE(s.find("(-1,-1)~225.0deg"), std::string::npos) << s;
}
