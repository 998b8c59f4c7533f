#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "nilrep/abelian.hpp"
#include "nilrep/smith.hpp"

using namespace nilrep;

namespace {

void expect_valid_smith(const IntMatrix &m) {
  const SmithForm f = smith_normal_form(m);
  ASSERT_EQ(f.left * m * f.right, f.diagonal) << m;
  EXPECT_EQ(abs(determinant(f.left)), 1);
  EXPECT_EQ(abs(determinant(f.right)), 1);
  for (std::size_t i = 0; i < f.diagonal.rows(); ++i)
    for (std::size_t j = 0; j < f.diagonal.cols(); ++j)
      if (i != j)
        EXPECT_EQ(f.diagonal(i, j), 0);
  const auto d = f.invariant_factors();
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_GE(d[i], 0);
    if (i + 1 < d.size())
      EXPECT_TRUE(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()))
          << d[i] << " does not divide " << d[i + 1];
  }
}

} // namespace

TEST(SmithNormalForm, Identity) {
  const auto f = smith_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(f.diagonal, IntMatrix::identity(2));
}

TEST(SmithNormalForm, ZeroMatrix) {
  const auto f = smith_normal_form(IntMatrix{{0}});
  EXPECT_EQ(f.diagonal, (IntMatrix{{0}}));
}

TEST(SmithNormalForm, CoprimeDiagonalMergesIntoLcm) {
  // gcd/lcm identity: diag(a, b) ~ diag(gcd, lcm).
  const auto f = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(f.diagonal, (IntMatrix{{1, 0}, {0, 6}}));
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; b <= 12; ++b) {
      const auto d = smith_normal_form(IntMatrix{{a, 0}, {0, b}}).invariant_factors();
      EXPECT_EQ(d[0], std::gcd(a, b));
      EXPECT_EQ(d[1], std::lcm(a, b));
    }
}

TEST(SmithNormalForm, EmptyShapes) {
  expect_valid_smith(IntMatrix(0, 3));
  expect_valid_smith(IntMatrix(3, 0));
  EXPECT_EQ(AbelianInvariants::cokernel_of_rows(IntMatrix(0, 3)), AbelianInvariants::free(3));
}

TEST(SmithNormalForm, EntryGrowthStaysExact) {
  IntMatrix m{{1000000007, 998244353, 3}, {-999999937, 1000000009, 7}, {5, 11, 13}};
  expect_valid_smith(m);
}

TEST(SmithNormalForm, RandomRoundTrip) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> entry(-5, 5), dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = entry(rng);
    expect_valid_smith(m);
  }
}

TEST(AbelianInvariants, CyclicOrdersNormalize) {
  const auto a = AbelianInvariants::from_cyclic_orders({4, 6, 0, 1});
  EXPECT_EQ(a.rank, 1u);
  EXPECT_EQ(a.torsion, (std::vector<Integer>{2, 12}));
  EXPECT_EQ(a.to_string(), "Z^1 + Z/2 + Z/12");
}

TEST(AbelianInvariants, PowerRepeatsDivisors) {
  const AbelianInvariants z2{0, {2}};
  const auto p = power(z2, 3);
  EXPECT_EQ(p.torsion, (std::vector<Integer>{2, 2, 2}));
  EXPECT_TRUE(power(z2, 0).is_trivial());
  EXPECT_EQ(power(AbelianInvariants::free(1), 4), AbelianInvariants::free(4));
}

TEST(AbelianInvariants, DivisorChainCheck) {
  EXPECT_TRUE(is_divisor_chain({2, 4, 12}));
  EXPECT_FALSE(is_divisor_chain({2, 3}));
  EXPECT_FALSE(is_divisor_chain({1, 2}));
  EXPECT_TRUE(is_divisor_chain({}));
}
