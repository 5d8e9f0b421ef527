#include <gtest/gtest.h>

#include <numeric>

#include "motive/errors.hpp"
#include "motive/level_arithmetic.hpp"

using namespace motive;

namespace {

// Cusps of Gamma(N): primitive vectors of (Z/N)^2 up to sign.
long brute_cusps(long N) {
  long count = 0;
  for (long a = 0; a < N; ++a)
    for (long b = 0; b < N; ++b)
      if (std::gcd(std::gcd(a, b), N) == 1) ++count;
  return count / 2;
}

}  // namespace

TEST(LevelArithmetic, CuspCountMatchesEnumeration) {
  for (long N = 3; N <= 24; ++N) EXPECT_EQ(cusp_count(N), brute_cusps(N)) << N;
}

TEST(LevelArithmetic, KnownGenera) {
  const long genus[] = {0, 0, 0, 1, 3, 5, 10, 13, 26, 25};
  for (long N = 3; N <= 12; ++N) EXPECT_EQ(level_invariants(N).genus, genus[N - 3]) << N;
}

TEST(LevelArithmetic, Table) {
  struct Row { long N, c, mu, g, s3, s4; };
  const Row rows[] = {{3, 4, 12, 0, 0, 1},    {4, 6, 24, 0, 1, 3},     {5, 12, 60, 0, 4, 9},
                      {6, 12, 72, 1, 6, 12},  {7, 24, 168, 3, 16, 30}, {8, 24, 192, 5, 20, 36}};
  for (const Row& r : rows) {
    LevelInvariants inv = level_invariants(r.N);
    EXPECT_EQ(inv.cusp_count, r.c);
    EXPECT_EQ(inv.euler_index, r.mu);
    EXPECT_EQ(inv.genus, r.g);
    EXPECT_EQ(inv.s3, r.s3) << r.N;
    EXPECT_EQ(inv.s4, r.s4) << r.N;
  }
}

TEST(LevelArithmetic, RejectsSmallLevels) {
  EXPECT_THROW(level_invariants(2), LevelTooSmall);
  EXPECT_THROW(cusp_count(1), LevelTooSmall);
}

TEST(LocalMultiplicity, DimensionAndParity) {
  for (long q = 0; q <= 4; ++q) {
    long total = 0;
    for (long r = 0; r <= 4; ++r) {
      total += local_multiplicity(q, r) * (r + 1);
      if ((q + r) % 2 != 0) {
        EXPECT_EQ(local_multiplicity(q, r), 0);
      }
    }
    EXPECT_EQ(total, binomial(4, q)) << q;
  }
  EXPECT_EQ(local_multiplicity(2, 2), 1);
  EXPECT_EQ(local_multiplicity(2, 0), 3);
  EXPECT_EQ(local_multiplicity(1, 1), 2);
  EXPECT_EQ(local_multiplicity(5, 1), 0);
}
