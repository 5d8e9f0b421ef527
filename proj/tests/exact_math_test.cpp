#include <gtest/gtest.h>

#include <random>

#include "motive/errors.hpp"
#include "motive/exact_math.hpp"
#include "motive/surface_calculus.hpp"

using namespace motive;

TEST(Rational, NormalizesAndParses) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_EQ(Rational(10, 5).to_long(), 2);
  EXPECT_THROW(Rational(1, 3).to_long(), std::range_error);
}

TEST(Rational, FieldAxiomsOnRandomSample) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-50, 50), p(1, 50);
  for (int i = 0; i < 500; ++i) {
    Rational a(d(rng), p(rng)), b(d(rng), p(rng)), c(d(rng), p(rng));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(RatMatrix, RankAndInverse) {
  RatMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  EXPECT_EQ(mat_rank(m), 2u);
  EXPECT_THROW(mat_inverse(m), Singular);
  RatMatrix k = mat_kernel(m);
  ASSERT_EQ(k.cols(), 1u);
  RatMatrix prod = m * k;
  for (std::size_t r = 0; r < 3; ++r) EXPECT_TRUE(prod.at(r, 0).is_zero());

  RatMatrix h{{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1, 3)}};
  RatMatrix inv = mat_inverse(h);
  EXPECT_EQ(inv, (RatMatrix{{4, -6}, {-6, 12}}));
  EXPECT_EQ(h * inv, RatMatrix::identity(2));
}

TEST(LinearCoeff, DegreeOneOnly) {
  LinearCoeff a = LinearCoeff::d_a();
  LinearCoeff two(2);
  EXPECT_EQ(two * a, LinearCoeff(0, 2));
  EXPECT_EQ((a + two).to_string(), "2 + d_a");
  EXPECT_THROW(a * a, DegreeOverflow);
}

// Inverse of the negated Cartan matrix of A_{N-1}: -min(m,n)(N-max(m,n))/N.
TEST(NeronLattice, ReducedInverseMatchesClosedForm) {
  for (int N = 3; N <= 12; ++N) {
    NeronLattice L = neron_lattice(N);
    EXPECT_EQ(L.rank, static_cast<std::size_t>(N - 1));
    EXPECT_EQ(L.reduced_inverse * L.reduced_block, RatMatrix::identity(N - 1));
    for (int m = 1; m < N; ++m)
      for (int n = 1; n < N; ++n) {
        Rational want(-static_cast<long>(std::min(m, n)) * (N - std::max(m, n)), N);
        EXPECT_EQ(L.reduced_inverse.at(m - 1, n - 1), want) << "N=" << N << " m=" << m << " n=" << n;
      }
  }
}
