#include <gtest/gtest.h>

#include <random>

#include "troplex/exactalg.hpp"

using namespace troplex;

namespace {

const auto ZZ = CoefficientRing::integers();
const auto QQ = CoefficientRing::rationals();

Rational q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

}  // namespace

TEST(Valuate, PAdicAndTrivial) {
  EXPECT_EQ(valuate(Valuation::p_adic(3), Scalar(ZZ, 18)).value(), 2);
  EXPECT_EQ(valuate(Valuation::trivial(), Scalar(QQ, q(7, 5))).value(), 0);
  EXPECT_EQ(valuate(Valuation::p_adic(3), Scalar(QQ, q(2, 9))).value(), -2);
  EXPECT_TRUE(valuate(Valuation::p_adic(5), Scalar(QQ, 0)).is_infinite());
  EXPECT_TRUE(valuate(Valuation::trivial(), Scalar(ZZ, 0)).is_infinite());
}

TEST(Valuate, PAdicOnPrimeFieldIsRejected) {
  Scalar a(CoefficientRing::prime_field(5), 3);
  try {
    valuate(Valuation::p_adic(5), a);
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_STREQ(e.what(), "valuation/ring mismatch");
  }
  EXPECT_EQ(valuate(Valuation::trivial(), a).value(), 0);
}

TEST(ReduceScalar, Examples) {
  EXPECT_EQ(reduce_scalar(Scalar(ZZ, -2), 3).value(), 1);
  EXPECT_EQ(reduce_scalar(Scalar(ZZ, 0), 2).value(), 0);
  EXPECT_EQ(reduce_scalar(Scalar(ZZ, -3), 3).value(), 0);
  EXPECT_EQ(reduce_scalar(Scalar(QQ, q(1, 2)), 3).value(), 2);
  try {
    reduce_scalar(Scalar(QQ, q(1, 3)), 3);
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_STREQ(e.what(), "not p-integral");
  }
}

TEST(CoefficientRing, ConstructionAndTags) {
  EXPECT_THROW(CoefficientRing::prime_field(4), AlgebraError);
  EXPECT_THROW(CoefficientRing::prime_field(1), AlgebraError);
  EXPECT_EQ(CoefficientRing::parse("fp:13"), CoefficientRing::prime_field(13));
  EXPECT_EQ(CoefficientRing::parse("Q"), QQ);
  EXPECT_EQ(CoefficientRing::parse("fp:2").name(), "F_2");
  EXPECT_EQ(CoefficientRing::parse("fp:2").tag(), "fp:2");
  EXPECT_THROW(CoefficientRing::parse("R"), AlgebraError);
  EXPECT_THROW(CoefficientRing::parse("fp:x"), AlgebraError);
  EXPECT_THROW(Scalar(ZZ, q(1, 2)), AlgebraError);
}

TEST(Scalar, MixingCharacteristicsFails) {
  Scalar a(CoefficientRing::prime_field(2), 1), b(CoefficientRing::prime_field(3), 1);
  EXPECT_THROW(a + b, AlgebraError);
  EXPECT_THROW(a * Scalar(QQ, 1), AlgebraError);
}

TEST(Scalar, NormalizationIsUnique) {
  Scalar a(QQ, q(6, -4)), b(QQ, q(-3, 2));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.value().get_num(), -3);
  EXPECT_EQ(a.value().get_den(), 2);
  Scalar c(CoefficientRing::prime_field(7), -1);
  EXPECT_EQ(c.value(), 6);
}

TEST(Valuate, HomomorphismProperties) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 300);
  for (std::uint64_t p : {2, 3, 5, 13}) {
    Valuation v = Valuation::p_adic(p);
    for (int i = 0; i < 200; ++i) {
      Rational a = q(num(rng), den(rng)), b = q(num(rng), den(rng));
      if (a == 0 || b == 0) continue;
      auto va = v.of(QQ, a), vb = v.of(QQ, b);
      EXPECT_EQ(v.of(QQ, a * b), va + vb);
      auto vs = v.of(QQ, a + b);
      auto lo = va < vb ? va : vb;
      EXPECT_GE(vs, lo);
      if (!(va == vb)) {
        EXPECT_EQ(vs, lo);
      }
    }
  }
}

TEST(ReduceScalar, IsARingHomomorphism) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-400, 400), den(1, 200);
  for (std::uint64_t p : {2, 3, 7, 13}) {
    auto fp = CoefficientRing::prime_field(p);
    for (int i = 0; i < 200; ++i) {
      Rational a = q(num(rng), den(rng)), b = q(num(rng), den(rng));
      if (mpz_divisible_ui_p(a.get_den_mpz_t(), p) || mpz_divisible_ui_p(b.get_den_mpz_t(), p)) continue;
      Scalar ra = reduce_scalar(Scalar(QQ, a), p), rb = reduce_scalar(Scalar(QQ, b), p);
      EXPECT_EQ(reduce_scalar(Scalar(QQ, a + b), p), ra + rb);
      EXPECT_EQ(reduce_scalar(Scalar(QQ, a * b), p), ra * rb);
      EXPECT_EQ(ra.ring(), fp);
    }
  }
}

TEST(Integers, PrimeDivisorsAndMultiplicity) {
  EXPECT_EQ(prime_divisors(Integer(-60)), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(prime_divisors(Integer(1)), std::vector<std::uint64_t>{});
  EXPECT_EQ(multiplicity(Integer(72), 2), 3);
  EXPECT_EQ(parse_rational("-6/4"), q(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), AlgebraError);
  EXPECT_THROW(parse_rational("abc"), AlgebraError);
}
