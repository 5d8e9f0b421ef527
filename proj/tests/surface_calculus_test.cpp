#include <gtest/gtest.h>

#include "motive/errors.hpp"
#include "motive/level_arithmetic.hpp"
#include "motive/open_part.hpp"
#include "motive/surface_calculus.hpp"

using namespace motive;

namespace {

std::vector<SurfCorr> all_projectors(int N) {
  SurfaceProjectors p = build_pi_bars(N);
  std::vector<SurfCorr> out(p.pi.begin(), p.pi.end());
  for (long c = 0; c < cusp_count(N); ++c) out.push_back(build_pi_cusp(N, static_cast<int>(c)));
  out.push_back(residual_projector(N));
  return out;
}

}  // namespace

TEST(SurfaceCalculus, GeneratorRelations) {
  for (int N : {3, 4, 5}) {
    SurfCorr p0 = p_bar_zero(N), p2 = p_bar_two(N), V = vertical(N), zero(N);
    EXPECT_EQ(compose(p0, p0), p0);
    EXPECT_EQ(compose(p2, p2), p2);
    EXPECT_EQ(compose(p2, p0), zero);
    EXPECT_EQ(compose(p0, p2), V);
    EXPECT_EQ(compose(V, V), zero);
    EXPECT_EQ(transpose(p0), p2);
  }
}

class KroneckerPattern : public ::testing::TestWithParam<int> {};

// The residual pi_inf = Delta - pi_f contains every pi_c as a sub-projector.
TEST_P(KroneckerPattern, ProjectorsAreOrthogonalIdempotents) {
  int N = GetParam();
  auto ps = all_projectors(N);
  const std::size_t res = ps.size() - 1;
  auto is_cusp = [&](std::size_t i) { return i >= 3 && i < res; };
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      SurfCorr prod = compose(ps[i], ps[j]);
      if (i == j)
        EXPECT_EQ(prod, ps[i]) << i;
      else if ((i == res && is_cusp(j)) || (j == res && is_cusp(i)))
        EXPECT_EQ(prod, ps[i == res ? j : i]) << i << "," << j;
      else
        EXPECT_TRUE(prod.is_zero()) << i << "," << j << ": " << render(prod);
    }
  SurfaceProjectors p = build_pi_bars(N);
  EXPECT_EQ(p.pi[0] + p.pi[1] + p.pi[2] + ps[res], surf_identity(N));
}

INSTANTIATE_TEST_SUITE_P(Levels, KroneckerPattern, ::testing::Values(3, 4, 5));

TEST(SurfaceCalculus, TransposeIsAnInvolutionAndAntiMultiplicative) {
  const int N = 4;
  auto atoms = surface_atom_universe(N);
  for (std::size_t i = 0; i < atoms.size(); i += 3) {
    SurfCorr x = surf_atom(N, atoms[i]);
    EXPECT_EQ(transpose(transpose(x)), x);
    for (std::size_t j = 0; j < atoms.size(); j += 5) {
      SurfCorr y = surf_atom(N, atoms[j]);
      EXPECT_EQ(transpose(compose(x, y)), compose(transpose(y), transpose(x)));
    }
  }
  SurfaceProjectors p = build_pi_bars(N);
  EXPECT_EQ(transpose(p.pi[0]), p.pi[2]);
  EXPECT_EQ(transpose(p.pi[1]), p.pi[1]);
}

TEST(SurfaceCalculus, AssociativityExhaustiveAtLevelThree) {
  const int N = 3;
  auto atoms = surface_atom_universe(N);
  std::vector<SurfCorr> xs;
  for (const auto& a : atoms) xs.push_back(surf_atom(N, a));
  for (const auto& a : xs)
    for (const auto& b : xs) {
      SurfCorr ab = compose(a, b);
      for (const auto& c : xs) ASSERT_EQ(compose(ab, c), compose(a, compose(b, c)));
    }
}

TEST(SurfaceCalculus, CertificatePasses) {
  for (int N : {3, 4, 5, 6}) {
    Certificate c = surface_certificate(N);
    for (const auto& e : c.entries)
      EXPECT_NE(e.status, Status::Fail) << e.name << "\n" << e.lhs << "\n" << e.rhs;
  }
}

TEST(SurfaceCalculus, RestrictionCertificatePasses) {
  for (int N : {3, 4, 5}) EXPECT_TRUE(restriction_certificate(N).passed()) << N;
}

TEST(SurfaceCalculus, DivisorActionOfProjectors) {
  const int N = 5;
  SurfaceProjectors p = build_pi_bars(N);
  // pi0 keeps only the fibre direction; pi2 sends the zero section to itself
  // up to vertical classes.
  DivClass F = DivClass::of(N, DivBasis::fiber());
  EXPECT_EQ(act_on_divisor(p.pi[1], F), DivClass(N));
  for (long c = 0; c < cusp_count(N); ++c) {
    DivClass fib = cusp_fiber(N, static_cast<int>(c));
    EXPECT_EQ(act_on_divisor(build_pi_cusp(N, static_cast<int>(c)), fib), DivClass(N)) << c;
  }
}

TEST(SurfaceCalculus, LevelMismatchThrows) {
  EXPECT_THROW(compose(surf_identity(3), surf_identity(4)), LevelMismatch);
}
