#include <gtest/gtest.h>

#include <random>

#include "troplex/laurent.hpp"

using namespace troplex;

namespace {

const auto ZZ = CoefficientRing::integers();
const auto QQ = CoefficientRing::rationals();
const auto F2 = CoefficientRing::prime_field(2);
const auto F3 = CoefficientRing::prime_field(3);

LaurentPoly P(const char* s, CoefficientRing r = ZZ, std::size_t n = 2) { return parse_laurent(s, r, n); }

LaurentPoly random_poly(std::mt19937& rng, CoefficientRing ring, std::size_t n, int terms, int deg, int coef) {
  std::uniform_int_distribution<int> e(0, deg), c(-coef, coef);
  LaurentPoly f(ring, n);
  for (int i = 0; i < terms; ++i) {
    Monomial m(n);
    for (auto& x : m) x = e(rng);
    f.add_term(m, Rational(c(rng)));
  }
  return f;
}

}  // namespace

TEST(Arith, Examples) {
  EXPECT_EQ(P("(t1 - 1)*(t1 + 1)"), P("t1^2 - 1"));
  LaurentPoly f = P("3*t1^-2*t2 - 5 + t2^3");
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_EQ(P("(1 + t1)^2", F2), P("1 + t1^2", F2));
  EXPECT_THROW(P("t1", ZZ) + P("t1", QQ), AlgebraError);
  EXPECT_THROW(P("t1", ZZ, 2) * P("t1", ZZ, 3), AlgebraError);
}

TEST(Render, GoldenFormat) {
  EXPECT_EQ(P("(1 - t1)^2 - 3*t2^2").str(), "1 - 2*t1 + t1^2 - 3*t2^2");
  EXPECT_EQ(P("t3^-2 - 2/3*t1*t2", QQ, 3).str(), "t3^-2 - 2/3*t1*t2");
  EXPECT_EQ(P("t1 - 1", F2).str(), "1 + t1");
  EXPECT_EQ(P("0").str(), "0");
  EXPECT_EQ(P("-t1").str(), "-t1");
}

TEST(Parse, RoundTrip) {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly f = random_poly(rng, ZZ, 3, 5, 3, 9).shifted({-1, 0, -2});
    EXPECT_EQ(parse_laurent(f.str(), ZZ, 3), f);
  }
  EXPECT_THROW(P("t3"), AlgebraError);
  EXPECT_THROW(P("(1 + t1"), AlgebraError);
  EXPECT_THROW(P("(1 + t1)^-1"), AlgebraError);
}

TEST(CanonicalAssociate, Examples) {
  EXPECT_EQ(canonical_associate(P("t1^-1*t2^-1*(t1 - 1)*(t2 - 1)")), P("1 - t1 - t2 + t1*t2"));
  EXPECT_EQ(canonical_associate(P("-3*t2^2 + (1 - t1)^2", QQ)).str(), "1 - 2*t1 + t1^2 - 3*t2^2");
  EXPECT_EQ(canonical_associate(P("5", QQ)), P("1", QQ));
  EXPECT_EQ(canonical_associate(P("-5")), P("5"));
  EXPECT_THROW(canonical_associate(P("0")), AlgebraError);
}

TEST(CanonicalAssociate, IdempotentAndUnitInvariant) {
  std::mt19937 rng(5);
  for (auto ring : {ZZ, QQ, F3}) {
    for (int i = 0; i < 30; ++i) {
      LaurentPoly f = random_poly(rng, ring, 2, 4, 3, 6);
      if (f.is_zero()) continue;
      LaurentPoly c = canonical_associate(f);
      EXPECT_EQ(canonical_associate(c), c);
      Rational u = ring.is_integers() ? Rational(-1) : Rational(2);
      EXPECT_EQ(canonical_associate(f.shifted({-3, 2}).scaled(u)), c);
    }
  }
}

TEST(Gcd, Examples) {
  EXPECT_EQ(laurent_gcd(P("t1 - 1"), P("(t1 - 1)*(t2 - 1)")), P("1 - t1"));
  LaurentPoly f = P("-2*t1^-1 + 4*t2");
  EXPECT_EQ(laurent_gcd(f, P("0")), canonical_associate(f));
  EXPECT_EQ(laurent_gcd(P("(1 + t1)^2", F2), P("(1 + t1)*(1 + t2)", F2)), P("1 + t1", F2));
  EXPECT_EQ(laurent_gcd(P("6*t1 - 6"), P("4*t1^2 - 4")), P("2 - 2*t1"));
  EXPECT_EQ(laurent_gcd(P("t1^3"), P("t2^-1 + t2")), P("1"));
  EXPECT_THROW(laurent_gcd(P("0"), P("0")), AlgebraError);
}

TEST(Gcd, DivisibilityAndScaling) {
  std::mt19937 rng(1234);
  int checked = 0;
  for (auto ring : {ZZ, QQ, F2, CoefficientRing::prime_field(13)}) {
    for (int i = 0, done = 0; done < 15; ++i) {
      std::size_t n = 1 + i % 3;
      LaurentPoly f = random_poly(rng, ring, n, 3, 2, 4), g = random_poly(rng, ring, n, 3, 2, 4),
                  h = random_poly(rng, ring, n, 2, 2, 3);
      if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
      LaurentPoly d = laurent_gcd(f, g);
      EXPECT_TRUE(divides(d, f)) << f << " / " << d;
      EXPECT_TRUE(divides(d, g)) << g << " / " << d;
      EXPECT_EQ(laurent_gcd(f * h, g * h), canonical_associate(d * h)) << f << " | " << g << " | " << h;
      ++checked;
      ++done;
    }
  }
  EXPECT_GE(checked, 50);
}

TEST(Divexact, ExactAndInexact) {
  EXPECT_EQ(divexact(P("t1^-1*(t1^2 - 1)"), P("t1 + 1")), P("1 - t1^-1"));
  EXPECT_THROW(divexact(P("t1^2 + 1"), P("t1 + 1")), AlgebraError);
  EXPECT_THROW(divexact(P("t1 + 1"), P("2")), AlgebraError);
  EXPECT_FALSE(divides(P("2"), P("t1 + 1")));
  EXPECT_TRUE(divides(P("2", QQ), P("t1 + 1", QQ)));
}

TEST(Units, Examples) {
  EXPECT_TRUE(is_unit(P("-t1^2*t2^-1")));
  EXPECT_FALSE(is_unit(P("2*t1")));
  EXPECT_TRUE(is_unit(P("2*t1", QQ)));
  EXPECT_FALSE(is_unit(P("1 + t1")));
  EXPECT_FALSE(is_unit(P("0")));
}

TEST(InitialForms, Valued) {
  LaurentPoly f = P("1 - 2*t1 + t1^2 - 3*t2^2", QQ);
  EXPECT_EQ(initial_form_valued(f, {0, 1}, Valuation::trivial()), P("1 - 2*t1 + t1^2", QQ));
  EXPECT_EQ(initial_form_valued(f, {0, 0}, Valuation::p_adic(3)), P("1 - 2*t1 + t1^2", QQ));
  LaurentPoly m = P("7*t1^3*t2^-1", QQ);
  EXPECT_EQ(initial_form_valued(m, {Rational(5, 3), -2}, Valuation::p_adic(7)), m);
  EXPECT_THROW(initial_form_valued(P("0", QQ), {0, 0}, Valuation::trivial()), AlgebraError);
}

TEST(InitialForms, Character) {
  LaurentPoly f = P("1 - 2*t1 + t1^2 - 3*t2^2");
  EXPECT_EQ(initial_form_chi(f, {1, -1}), P("-3*t2^2"));
  EXPECT_EQ(initial_form_chi(f, {0, 0}), f);
  EXPECT_EQ(initial_form_chi(f, {0, 1}), P("1 - 2*t1 + t1^2"));
}

TEST(InitialForms, MultiplicativeOverDomain) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> w(-3, 3);
  for (int i = 0; i < 60; ++i) {
    LaurentPoly f = random_poly(rng, ZZ, 2, 4, 3, 5), g = random_poly(rng, ZZ, 2, 4, 3, 5);
    if (f.is_zero() || g.is_zero()) continue;
    Covector chi{w(rng), w(rng)};
    EXPECT_EQ(initial_form_chi(f * g, chi), initial_form_chi(f, chi) * initial_form_chi(g, chi));
  }
}

TEST(InitialForms, TrivialValuationMatchesCharacterOverFields) {
  std::mt19937 rng(78);
  std::uniform_int_distribution<int> w(-4, 4);
  for (auto ring : {QQ, F3}) {
    for (int i = 0; i < 30; ++i) {
      LaurentPoly f = random_poly(rng, ring, 2, 5, 3, 5);
      if (f.is_zero()) continue;
      Covector chi{Rational(w(rng), 2), w(rng)};
      EXPECT_EQ(initial_form_valued(f, chi, Valuation::trivial()), initial_form_chi(f, chi));
    }
  }
}

TEST(ReduceModP, Examples) {
  LaurentPoly f = P("1 - 2*t1 + t1^2 - 3*t2^2");
  EXPECT_EQ(reduce_mod_p(f, 3), P("1 + t1 + t1^2", F3));
  EXPECT_EQ(reduce_mod_p(f, 3), P("(1 - t1)^2", F3));
  EXPECT_EQ(reduce_mod_p(f, 2), P("1 + t1^2 + t2^2", F2));
  EXPECT_TRUE(reduce_mod_p(P("3*t2^2"), 3).is_zero());
  EXPECT_THROW(reduce_mod_p(P("1/3*t1", QQ), 3), AlgebraError);
}

TEST(Squarefree, CharacteristicZeroAndP) {
  EXPECT_EQ(squarefree_part(P("(t1 - 1)^2*(t2 + 1)", QQ)), canonical_associate(P("(t1 - 1)*(t2 + 1)", QQ)));
  EXPECT_EQ(squarefree_part(P("12*(t1 - 1)^3")), P("6 - 6*t1"));
  EXPECT_EQ(squarefree_part(P("(1 + t1)^2", F2)), P("1 + t1", F2));
  EXPECT_EQ(squarefree_part(P("(1 + t1)^4*(1 + t2)^3*(t1 + t2)", F2)), P("(1 + t1)*(1 + t2)*(t1 + t2)", F2));
  EXPECT_EQ(squarefree_part(P("(1 + t1 + t2)^3", F3)), P("1 + t1 + t2", F3));
  EXPECT_EQ(squarefree_part(P("t1^-4*t2", F3)), P("1", F3));
}
