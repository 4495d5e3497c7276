#include <gtest/gtest.h>

#include <random>

#include "troplex/fpgroup.hpp"

using namespace troplex;

namespace {

const auto ZZ = CoefficientRing::integers();
const auto QQ = CoefficientRing::rationals();

const char* kRelator = "x1^-1 x2^-1 x1 x2^2 x1^-1 x2^-1 x1^2 x2^-1 x1^-1 x2 x1^-1 x2 x1 x2^-1";

Presentation one_relator() {
  Presentation base = Presentation::with_default_names(2, {});
  return Presentation::with_default_names(2, {base.parse_word(kRelator)});
}

RatMatrix mat2(long a, long b, long c, long d) { return {2, {a, b, c, d}}; }

Representation s3_rep() { return {ZZ, 2, {mat2(-1, 1, -1, 0), mat2(0, 1, 1, 0)}}; }

LaurentPoly P(const char* s, CoefficientRing r = ZZ, std::size_t n = 2) { return parse_laurent(s, r, n); }

}  // namespace

TEST(Words, ParseAndPrint) {
  Presentation p = one_relator();
  EXPECT_EQ(p.relators()[0].size(), 16u);
  EXPECT_EQ(p.word_string(p.relators()[0]), kRelator);
  EXPECT_EQ(p.parse_word("x1^3 x1^-1"), (Word{1, 1, 1, -1}));
  EXPECT_EQ(free_reduce({1, 2, -2, -1, 2}), (Word{2}));
  EXPECT_THROW(p.parse_word("x3"), AlgebraError);
  EXPECT_THROW(p.parse_word("x1^a"), AlgebraError);
  EXPECT_EQ(p.parse_word("1"), Word{});
}

TEST(Fox, Axioms) {
  EXPECT_EQ(fox_derivative({1, 2}, 1), (GroupRingElement{{Word{}, Integer(1)}}));
  EXPECT_EQ(fox_derivative({-1}, 1), (GroupRingElement{{Word{-1}, Integer(-1)}}));
  EXPECT_TRUE(fox_derivative({2}, 1).empty());
  EXPECT_TRUE(fox_derivative({1, -1}, 1).empty());
}

TEST(Fox, ProductRuleOnRandomWords) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> letter(-3, 3), len(0, 6);
  auto rand_word = [&] {
    Word w;
    for (int k = len(rng); k > 0; --k) {
      int x = 0;
      while (x == 0) x = letter(rng);
      w.push_back(x);
    }
    return w;
  };
  Representation triv = Representation::trivial(ZZ, 3);
  EpimorphismToFreeAbelian phi{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int t = 0; t < 50; ++t) {
    Word u = rand_word(), v = rand_word();
    for (int i = 1; i <= 3; ++i) {
      PolyMatrix lhs = specialize(fox_derivative(word_concat(u, v), i), triv, phi);
      PolyMatrix rhs = specialize(fox_derivative(u, i), triv, phi);
      PolyMatrix tail = evaluate_word(triv, phi, u) * specialize(fox_derivative(v, i), triv, phi);
      EXPECT_EQ(lhs(0, 0), rhs(0, 0) + tail(0, 0));
    }
  }
}

TEST(Fox, OneRelatorDerivativeMatchesDisplayedExpansion) {
  // The displayed expansion of dR/dx1 as a sum of four brackets.
  Presentation p = Presentation::with_default_names(2, {});
  auto W = [&](const char* s) { return p.parse_word(s); };
  Word c1 = commutator(W("x1^-1"), W("x2^-1")), c2 = commutator(W("x2"), W("x1^-1")),
       c3 = commutator(W("x1"), W("x2^-1"));
  GroupRingElement expect;
  auto add = [&](const Word& w, int c) {
    auto r = free_reduce(w);
    expect[r] += c;
    if (expect[r] == 0) expect.erase(r);
  };
  // -x1^-1 (1 - x2^-1)
  add(W("x1^-1"), -1), add(W("x1^-1 x2^-1"), 1);
  // - c1 x2 x1^-1 (1 - x2^-1)
  add(word_concat(c1, W("x2 x1^-1")), -1), add(word_concat(c1, W("x2 x1^-1 x2^-1")), 1);
  // + c1 c2 (1 - x1 x2^-1 x1^-1)
  add(word_concat(c1, c2), 1), add(word_concat(word_concat(c1, c2), W("x1 x2^-1 x1^-1")), -1);
  // - c1 c2 c3 x1^-1 (1 - x2)
  Word c123 = word_concat(word_concat(c1, c2), c3);
  add(word_concat(c123, W("x1^-1")), -1), add(word_concat(c123, W("x1^-1 x2")), 1);
  EXPECT_EQ(fox_derivative(one_relator().relators()[0], 1), expect);
}

TEST(Representation, VerifyExamples) {
  Presentation p = one_relator();
  EXPECT_TRUE(verify_representation(p, s3_rep()));
  EXPECT_TRUE(verify_representation(p, Representation::trivial(QQ, 2, 3)));
  Presentation orb = build_orbifold_presentation(1, {2, 3});
  // z1 -> -1 has order 2 (ok), z2 -> -1 has order 2, which does not divide 3
  Representation bad(QQ, 1, {mat2(1, 0, 0, 1).n == 2 ? RatMatrix{1, {1}} : RatMatrix{}, RatMatrix{1, {1}},
                             RatMatrix{1, {-1}}, RatMatrix{1, {-1}}});
  EXPECT_FALSE(verify_representation(orb, bad));
  EXPECT_THROW(Representation(QQ, 2, {mat2(1, 2, 2, 4)}), AlgebraError);
  EXPECT_THROW(Representation(ZZ, 2, {mat2(2, 0, 0, 1)}), AlgebraError);
}

TEST(Representation, EvaluateWord) {
  Presentation p = Presentation::with_default_names(2, {});
  Representation triv = Representation::trivial(ZZ, 2);
  EpimorphismToFreeAbelian phi{2, {{1, 0}, {0, 1}}};
  EXPECT_EQ(evaluate_word(triv, phi, p.parse_word("x1 x2 x1^-1"))(0, 0), P("t2"));
  EXPECT_EQ(evaluate_word(s3_rep(), phi, {}), PolyMatrix::identity(ZZ, 2, 2));
  PolyMatrix sq = evaluate_word(s3_rep(), phi, p.parse_word("x2^2"));
  PolyMatrix expect(ZZ, 2, 2, 2);
  expect(0, 0) = P("t2^2");
  expect(1, 1) = P("t2^2");
  EXPECT_EQ(sq, expect);
}

TEST(Abelianization, Examples) {
  auto ab = abelianize(one_relator());
  EXPECT_EQ(ab.free_rank, 2u);
  EXPECT_EQ(ab.projection, (std::vector<std::vector<long>>{{1, 0}, {0, 1}}));
  auto orb = abelianize(build_orbifold_presentation(1, {2, 3}));
  EXPECT_EQ(orb.free_rank, 2u);
  EXPECT_TRUE(orb.torsion.empty());
  EXPECT_EQ(orb.projection, (std::vector<std::vector<long>>{{1, 0}, {0, 1}, {0, 0}, {0, 0}}));
  auto orb2 = abelianize(build_orbifold_presentation(1, {2, 2}));
  EXPECT_EQ(orb2.torsion, std::vector<Integer>{2});
}

TEST(Abelianization, EpimorphismChecks) {
  Presentation p = one_relator();
  EXPECT_THROW((EpimorphismToFreeAbelian{1, {{2}, {0}}}.check(p)), AlgebraError);
  EXPECT_NO_THROW((EpimorphismToFreeAbelian{1, {{1}, {3}}}.check(p)));
  Presentation orb = build_orbifold_presentation(1, {2});
  EXPECT_THROW((EpimorphismToFreeAbelian{1, {{0}, {0}, {1}}}.check(orb)), AlgebraError);
}

TEST(AlexanderMatrices, OneRelatorUntwisted) {
  Presentation p = one_relator();
  auto phi = EpimorphismToFreeAbelian::from_abelianization(p);
  auto mats = alexander_matrices(p, Representation::trivial(ZZ, 2), phi);
  ASSERT_EQ(mats.d2.rows(), 1u);
  ASSERT_EQ(mats.d2.cols(), 2u);
  EXPECT_EQ(mats.d2(0, 0), P("t1^-1*t2^-1*(t1 - 1)*(t2 - 1)"));
  EXPECT_EQ(mats.d2(0, 1), P("t1^-1*t2^-1*(t1 - 1)*(1 - t1)"));
  EXPECT_EQ(mats.d1(0, 0), P("t1 - 1"));
  EXPECT_EQ(mats.d1(1, 0), P("t2 - 1"));
}

TEST(AlexanderMatrices, OneRelatorTwistedMatchesDisplay) {
  Presentation p = one_relator();
  auto phi = EpimorphismToFreeAbelian::from_abelianization(p);
  auto mats = alexander_matrices(p, s3_rep(), phi);
  const char* shown[2][4] = {
      {"(1 + t2)*(-1 + t1 + 2*t2)", "-t2*(1 + t2)", "1 - t1^2 - t2 - 2*t1*t2", "-t1 + t1^2 + 2*t2 + t1*t2"},
      {"-1 + t1 + t2 + t2^2", "1 - t1 + t1*t2 - 2*t2^2", "1 - t1 - 2*t2 - t1*t2", "(-1 + t1)*(1 + t1 - t2)"}};
  LaurentPoly pre = P("t1^-1*t2^-1");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(mats.d2(i, j), pre * P(shown[i][j])) << i << j;
}

TEST(AlexanderMatrices, TorusRow) {
  Presentation torus = build_orbifold_presentation(1, {});
  auto phi = EpimorphismToFreeAbelian::from_abelianization(torus);
  auto mats = alexander_matrices(torus, Representation::trivial(ZZ, 2), phi);
  EXPECT_EQ(mats.d2(0, 0), P("1 - t2"));
  EXPECT_EQ(mats.d2(0, 1), P("t1 - 1"));
}

TEST(AlexanderMatrices, FoxFundamentalIdentity) {
  Presentation p = one_relator();
  auto phi = EpimorphismToFreeAbelian::from_abelianization(p);
  for (const auto& s : {Representation::trivial(ZZ, 2), s3_rep()}) {
    auto mats = alexander_matrices(p, s, phi);
    EXPECT_TRUE((mats.d2 * mats.d1).is_zero());
  }
}

TEST(AlexanderMatrices, UnverifiedRepresentationIsRejected) {
  Presentation p = one_relator();
  Representation bad(ZZ, 2, {mat2(1, 1, 0, 1), mat2(0, 1, 1, 0)});
  EXPECT_THROW(alexander_matrices(p, bad, EpimorphismToFreeAbelian::from_abelianization(p)), AlgebraError);
}

TEST(Homology, CharacterExamples) {
  Presentation p = one_relator();
  auto phi = EpimorphismToFreeAbelian::from_abelianization(p);
  Representation triv = Representation::trivial(QQ, 2);
  EXPECT_EQ(homology_dims_at_character(p, triv, phi, {2, 5}), (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_EQ(homology_dims_at_character(p, triv, phi, {1, 5}).second, 1u);
  EXPECT_EQ(homology_dims_at_character(p, triv, phi, {1, 1}), (std::pair<std::size_t, std::size_t>{1, 2}));
  EXPECT_THROW(homology_dims_at_character(p, triv, phi, {0, 1}), AlgebraError);
  EXPECT_THROW(homology_dims_at_character(p, Representation::trivial(ZZ, 2), phi, {1, 1}), AlgebraError);
}

TEST(Homology, TorsionCharacter) {
  Presentation orb = build_orbifold_presentation(1, {2, 2});
  auto phi = EpimorphismToFreeAbelian::from_abelianization(orb);
  Representation triv = Representation::trivial(QQ, 4);
  // z1, z2 -> -1 kills z_j^2 and the long relator
  auto dims = homology_dims_at_character(orb, triv, phi, {1, 1}, {1, 1, -1, -1});
  EXPECT_EQ(dims.first, 0u);
  EXPECT_THROW(homology_dims_at_character(orb, triv, phi, {1, 1}, {1, 1, -1, 1}), AlgebraError);
}

TEST(Builders, Orbifold) {
  Presentation t = build_orbifold_presentation(1, {});
  EXPECT_EQ(t.ngens(), 2u);
  EXPECT_EQ(t.word_string(t.relators()[0]), "x1 y1 x1^-1 y1^-1");
  Presentation s2 = build_orbifold_presentation(2, {});
  EXPECT_EQ(s2.ngens(), 4u);
  EXPECT_EQ(s2.nrels(), 1u);
  Presentation o = build_orbifold_presentation(1, {2, 3});
  EXPECT_EQ(o.ngens(), 4u);
  ASSERT_EQ(o.nrels(), 3u);
  EXPECT_EQ(o.word_string(o.relators()[0]), "x1 y1 x1^-1 y1^-1 z1 z2");
  EXPECT_EQ(o.word_string(o.relators()[1]), "z1^2");
  EXPECT_EQ(o.word_string(o.relators()[2]), "z2^3");
  EXPECT_THROW(build_orbifold_presentation(0, {}), AlgebraError);
  EXPECT_THROW(build_orbifold_presentation(1, {1}), AlgebraError);
}

TEST(Builders, WeightedRaag) {
  Presentation g = build_weighted_raag(4, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 3, 2}, {2, 4, 2}, {3, 4, 2}});
  EXPECT_EQ(g.ngens(), 4u);
  EXPECT_EQ(g.nrels(), 6u);
  EXPECT_EQ(g.word_string(g.relators()[3]), "a2 a3 a2^-1 a3^-1 a2 a3 a2^-1 a3^-1");
  Presentation k3 = build_weighted_raag(3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  EXPECT_EQ(abelianize(k3).free_rank, 3u);
  EXPECT_TRUE(abelianize(k3).torsion.empty());
  Presentation g13 = build_weighted_raag(2, {{1, 2, 13}});
  EXPECT_EQ(g13.relators()[0].size(), 52u);
  EXPECT_THROW(build_weighted_raag(2, {{1, 1, 1}}), AlgebraError);
}

TEST(Builders, Product) {
  Presentation z = Presentation::with_default_names(1, {});
  Presentation zz = build_product_presentation(z, z);
  EXPECT_EQ(zz.names(), (std::vector<std::string>{"x1", "x1_2"}));
  EXPECT_EQ(zz.nrels(), 1u);
  EXPECT_EQ(abelianize(zz).free_rank, 2u);
  Presentation f2 = Presentation::with_default_names(2, {});
  Presentation f2z = build_product_presentation(f2, z);
  EXPECT_EQ(f2z.ngens(), 3u);
  EXPECT_EQ(f2z.nrels(), 2u);
  Presentation g = build_weighted_raag(2, {{1, 2, 3}});
  Presentation gg = build_product_presentation(one_relator(), g);
  EXPECT_EQ(gg.ngens(), 4u);
  EXPECT_EQ(gg.nrels(), 1u + 1u + 4u);
}

TEST(Regular, CyclicOfOrderTwo) {
  Presentation z = Presentation::with_default_names(1, {});
  Representation reg = regular_representation(z, {{1, 0}});
  EXPECT_EQ(reg.rank(), 2u);
  // character (trace) pattern (2, 0)
  EXPECT_EQ(RatMatrix::identity(2), evaluate_word(reg, Word{}));
  const RatMatrix& s = reg.images()[0];
  EXPECT_EQ(s(0, 0) + s(1, 1), 0);
  EXPECT_EQ(mat_mul(ZZ, s, s), RatMatrix::identity(2));
}

TEST(Regular, SymmetricQuotientOfOneRelatorGroup) {
  Presentation p = one_relator();
  Representation reg = regular_representation(p, {{1, 2, 0}, {1, 0, 2}});
  EXPECT_EQ(reg.rank(), 6u);
  EXPECT_TRUE(verify_representation(p, reg));
  Representation one = regular_representation(Presentation::with_default_names(1, {}), {{0}});
  EXPECT_EQ(one.rank(), 1u);
  EXPECT_THROW(regular_representation(p, {{1, 2, 0}, {1, 0, 2}}, 5), AlgebraError);
  EXPECT_THROW(regular_representation(p, {{1, 2, 0, 3}, {1, 0, 3, 2}}), AlgebraError);
}
