#include <gtest/gtest.h>

#include "motive/errors.hpp"
#include "motive/level_arithmetic.hpp"
#include "motive/motive_report.hpp"

using namespace motive;

namespace {

std::vector<long> numeric(const BettiTable& t) {
  std::vector<long> out;
  for (const Count& c : t.b) out.push_back(c.value());
  return out;
}

}  // namespace

TEST(SurfaceMotive, KnownBettiTables) {
  EXPECT_EQ(numeric(realize_betti(decompose_surface(3), true)), (std::vector<long>{1, 0, 10, 0, 1}));
  EXPECT_EQ(numeric(realize_betti(decompose_surface(4), true)), (std::vector<long>{1, 0, 22, 0, 1}));
}

TEST(SurfaceMotive, EulerAndPoincare) {
  for (int N = 3; N <= 10; ++N) {
    LevelInvariants inv = level_invariants(N);
    BettiTable t = realize_betti(decompose_surface(N), true);
    EXPECT_EQ(t.euler().value(), N * inv.cusp_count) << N;
    EXPECT_TRUE(t.poincare_symmetric());
    // Independent route: b2 from the Euler number e = 2 - 4g + b2.
    EXPECT_EQ(t.b[2].value(), N * inv.cusp_count - 2 + 4 * inv.genus);
    EXPECT_EQ(t.b[1].value(), 2 * inv.genus);
  }
}

TEST(SurfaceMotive, MultiplicityRoutesAndDocumentedDiscrepancy) {
  for (int N = 3; N <= 10; ++N) {
    LevelInvariants inv = level_invariants(N);
    SurfaceMultiplicity m = surface_multiplicity(N);
    EXPECT_EQ(m.assembly, 2 + (N - 1) * inv.cusp_count);
    EXPECT_EQ(m.assembly, m.from_betti) << N;
    EXPECT_EQ(m.assembly, m.ns_rank) << N;
    EXPECT_EQ(m.closed_form, (N - 1) * inv.cusp_count);
    EXPECT_EQ(m.discrepancy(), 2);
  }
}

TEST(ThreefoldMotive, SymbolicBettiNeedsN) {
  Motive m = decompose_threefold(5);
  EXPECT_THROW(realize_betti(m, true), SymbolicMultiplicity);
  BettiTable t = realize_betti(m);
  ASSERT_EQ(t.b.size(), 7u);
  EXPECT_TRUE(t.b[2].is_symbolic());
  EXPECT_EQ(t.b[3].value(), 2 * level_invariants(5).s4);
  EXPECT_TRUE(t.poincare_symmetric());
  BettiTable filled = realize_betti(m, true, 100);
  EXPECT_EQ(filled.b[2].value(), 116);
}

TEST(ThreefoldMotive, ConstituentCountsFollowLocalMultiplicities) {
  for (int N : {3, 5, 7}) {
    LevelInvariants inv = level_invariants(N);
    Motive m = decompose_threefold(N);
    BettiTable t = realize_betti(m);
    // b3: three copies of h1(M)(x)L plus W2; b2: n L plus two copies of W1.
    EXPECT_EQ(t.b[3].value(), 3 * 2 * inv.genus + 2 * inv.s4) << N;
    EXPECT_EQ(t.b[1].value(), 2 * inv.genus);
    EXPECT_EQ(t.b[2].n_coeff, 1);
    EXPECT_EQ(t.b[2].constant, 2 * 2 * inv.s3);
  }
}

TEST(Filtration, VanishingPatternAndStepCounts) {
  for (int N : {3, 5, 8}) {
    for (bool three : {false, true}) {
      Motive m = three ? decompose_threefold(N) : decompose_surface(N);
      FiltrationTable f = filtration_table(m);
      EXPECT_TRUE(f.vanishing_ok);
      for (const FiltrationRow& r : f.rows) EXPECT_EQ(r.steps, r.codim);
      ASSERT_FALSE(f.rows.empty());
      EXPECT_EQ(f.rows.front().codim, 1);
      EXPECT_EQ(f.rows.front().steps, 1);
      for (const auto& [item, ok] : f.ch1_checklist) EXPECT_TRUE(ok) << item;
    }
  }
}

TEST(Filtration, ChowDegreesRespectBounds) {
  for (BasisKind k : {BasisKind::Unit, BasisKind::L, BasisKind::H1M, BasisKind::W1, BasisKind::W2})
    for (int twist = 0; twist <= 2; ++twist) {
      MotiveKey key{k, twist};
      if (k == BasisKind::W2 && twist > 0) continue;
      int i = key.degree();
      for (int j : key.chow_degrees()) {
        EXPECT_LE(j, i) << key.to_string();
        EXPECT_LE(i, 2 * j) << key.to_string();
      }
    }
}

TEST(ChowKunneth, RowsCoverEveryDegree) {
  auto rows = chow_kunneth_table(decompose_threefold(4));
  ASSERT_EQ(rows.size(), 7u);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].degree, static_cast<int>(i));
}
