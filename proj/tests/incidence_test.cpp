#include <gtest/gtest.h>

#include "motive/incidence.hpp"
#include "motive/level_arithmetic.hpp"
#include "motive/motive_report.hpp"

using namespace motive;

TEST(Incidence, ComponentAndStratumCounts) {
  for (int N : {3, 4, 5, 6}) {
    IncidenceComplex x = cusp_incidence(N);
    std::size_t n2 = static_cast<std::size_t>(N) * N;
    EXPECT_EQ(x.components.size(), 2 * n2);
    EXPECT_EQ(x.curves.size(), 6 * n2);
    EXPECT_EQ(x.triple_points.size(), 4 * n2);
    for (std::size_t i = 0; i < x.components.size(); ++i)
      if (x.components[i].type == ComponentType::Quadric) {
        EXPECT_EQ(x.neighbours(i).size(), 4u);
      }
  }
}

TEST(Incidence, EulerNumberOfFibre) {
  for (int N : {3, 4, 5, 7}) EXPECT_EQ(euler_fiber(N), 4L * N * N) << N;
}

TEST(Incidence, FibreIsNumericallyTrivialOnCurves) {
  IncidenceComplex x = cusp_incidence(4);
  for (long d : fibre_degree_on_curves(x)) EXPECT_EQ(d, 0);
}

TEST(Incidence, LatticeRank) {
  for (int N : {3, 4, 5}) EXPECT_EQ(vertical_lattice_rank(cusp_incidence(N)), static_cast<std::size_t>(2 * N * N - 1));
}

TEST(Incidence, ExperimentalNRoutesAgree) {
  for (int N : {3, 4, 5}) {
    NEstimate e = estimate_n(N);
    EXPECT_TRUE(e.experimental);
    EXPECT_TRUE(e.consistent);
    EXPECT_EQ(e.n_euler, e.n_lattice);
    EXPECT_GT(e.n_euler, 0);
    // Topological Euler number c * e(fibre) against the alternating Betti sum.
    LevelInvariants inv = level_invariants(N);
    BettiTable t = realize_betti(decompose_threefold(N), true, e.n_euler);
    long alt = 0;
    for (std::size_t i = 0; i < t.b.size(); ++i) alt += (i % 2 ? -1 : 1) * t.b[i].value();
    EXPECT_EQ(alt, inv.cusp_count * euler_fiber(N)) << N;
  }
}
