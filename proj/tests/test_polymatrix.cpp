#include <gtest/gtest.h>

#include <random>

#include "troplex/polymatrix.hpp"

using namespace troplex;

namespace {

const auto ZZ = CoefficientRing::integers();
const auto QQ = CoefficientRing::rationals();

PolyMatrix from_strings(const std::vector<std::vector<const char*>>& rows, CoefficientRing ring = ZZ, std::size_t n = 2) {
  PolyMatrix m(ring, n, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_laurent(rows[i][j], ring, n);
  return m;
}

// Cofactor expansion along the first row, as an independent determinant.
LaurentPoly laplace(const PolyMatrix& a) {
  std::size_t n = a.rows();
  if (n == 0) return LaurentPoly::one(a.ring(), a.nvars());
  LaurentPoly s(a.ring(), a.nvars());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> ri, ci;
    for (std::size_t i = 1; i < n; ++i) ri.push_back(i);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) ci.push_back(c);
    LaurentPoly t = a(0, j) * laplace(a.submatrix(ri, ci));
    s += (j % 2) ? -t : t;
  }
  return s;
}

}  // namespace

TEST(Determinant, MatchesLaplaceOnRandomMatrices) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> c(-2, 2), e(-1, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 4;
    PolyMatrix a(ZZ, 2, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (int t = 0; t < 2; ++t) a(i, j).add_term({e(rng), e(rng)}, Rational(c(rng)));
    EXPECT_EQ(determinant(a), laplace(a));
  }
}

TEST(Minors, Conventions) {
  PolyMatrix z(ZZ, 2, 2, 3);
  EXPECT_TRUE(minors(z, 1).empty());
  EXPECT_FALSE(minors_gcd(z, 1).has_value());
  auto m0 = minors(z, 0);
  ASSERT_EQ(m0.size(), 1u);
  EXPECT_EQ(m0[0], LaurentPoly::one(ZZ, 2));
  EXPECT_THROW(minors(z, 3), AlgebraError);
}

TEST(Minors, TorusRow) {
  PolyMatrix m = from_strings({{"1 - t2", "t1 - 1"}});
  auto gens = minors(m, 1);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(*minors_gcd(m, 1), LaurentPoly::one(ZZ, 2));
}

TEST(GenericRank, SymbolicRank) {
  PolyMatrix m = from_strings({{"t1 - 1", "t2 - 1"}, {"(t1 - 1)*(t1 + 1)", "(t2 - 1)*(t1 + 1)"}, {"0", "t1"}});
  EXPECT_EQ(generic_rank(m), 2u);
  PolyMatrix d = from_strings({{"t1 - 1", "t2 - 1"}, {"(t1 - 1)*(t1 + 1)", "(t2 - 1)*(t1 + 1)"}});
  EXPECT_EQ(generic_rank(d), 1u);
  EXPECT_TRUE(determinant(d).is_zero());
  EXPECT_EQ(generic_rank(PolyMatrix(ZZ, 2, 3, 3)), 0u);
}

TEST(FieldMatrix, RankOverQAndFp) {
  PolyMatrix m = from_strings({{"t1 - 1", "0"}, {"2", "t2 - 5"}}, ZZ);
  EXPECT_EQ(evaluate(m, {Rational(1), Rational(5)}).rank(), 1u);
  EXPECT_EQ(evaluate(m, {Rational(2), Rational(5)}).rank(), 1u);
  EXPECT_EQ(evaluate(m, {Rational(2), Rational(3)}).rank(), 2u);
  PolyMatrix m2 = change_ring(m, CoefficientRing::prime_field(2));
  EXPECT_EQ(evaluate(m2, {Rational(1), Rational(1)}).rank(), 0u);
}

TEST(IntegerLattices, KernelAndSmith) {
  IntMatrix e = {{0, 0, 1, 1}, {0, 0, 2, 0}, {0, 0, 0, 3}};
  IntMatrix k = integer_kernel(e, 4);
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], (std::vector<Integer>{1, 0, 0, 0}));
  EXPECT_EQ(k[1], (std::vector<Integer>{0, 1, 0, 0}));
  EXPECT_EQ(smith_invariants(e, 4), (std::vector<Integer>{1, 1}));
  IntMatrix t = {{2, 0}, {0, 3}};
  EXPECT_EQ(smith_invariants(t, 2), (std::vector<Integer>{1, 6}));
  IntMatrix z = {{0, 0, 0}};
  EXPECT_EQ(integer_kernel(z, 3).size(), 3u);
  IntMatrix w = {{2, 4, 6}};
  auto kw = integer_kernel(w, 3);
  ASSERT_EQ(kw.size(), 2u);
  for (const auto& v : kw) EXPECT_EQ(2 * v[0] + 4 * v[1] + 6 * v[2], 0);
  EXPECT_EQ(smith_invariants(w, 3), (std::vector<Integer>{2}));
}
