#include <gtest/gtest.h>

#include "motive/symmetry_algebra.hpp"

using namespace motive;

class GroupRingSuite : public ::testing::TestWithParam<int> {};

TEST_P(GroupRingSuite, GroupLaws) {
  int N = GetParam();
  auto G = enumerate_group(N);
  ASSERT_EQ(G.size(), static_cast<std::size_t>(2 * N * N));
  for (const GElem& x : G) {
    EXPECT_TRUE(g_mul(x, x.inverse()).is_identity());
    for (const GElem& y : G) EXPECT_EQ(epsilon(g_mul(x, y)), epsilon(x) * epsilon(y));
  }
}

TEST_P(GroupRingSuite, ProjectorRelations) {
  int N = GetParam();
  QG one = QG::unit(GElem::identity(N));
  QG eps = epsilon_projector(N);
  auto [lambda, theta] = lambda_theta(N);
  EXPECT_EQ(eps * eps, eps);
  EXPECT_EQ(lambda * lambda, lambda);
  EXPECT_EQ(theta * theta, theta);
  EXPECT_EQ(lambda * theta, theta * lambda);
  EXPECT_EQ(lambda * theta, eps);
  EXPECT_EQ(eps * lambda, eps);
  EXPECT_EQ(eps * (one - lambda), QG(N));
  EXPECT_EQ(eps.inverted(), eps);
  // eps is central.
  for (const GElem& g : enumerate_group(N)) EXPECT_EQ(QG::unit(g) * eps, eps * QG::unit(g));
}

TEST_P(GroupRingSuite, Symmetrizers) {
  int N = GetParam();
  auto [a2, s2] = symmetrizers(N);
  QG2 one = QG2::unit(G2Elem::identity(N));
  EXPECT_EQ(a2 * a2, a2);
  EXPECT_EQ(s2 * s2, s2);
  EXPECT_EQ(a2 * s2, QG2(N));
  EXPECT_EQ(a2 + s2, one);
  QG2 e2 = epsilon2_projector(N);
  // e2 has (2N^2)^2 terms; squaring it is only cheap at small levels.
  if (N <= 4) {
    EXPECT_EQ(e2 * e2, e2);
  }
  EXPECT_EQ(e2 * a2, a2 * e2);
  QG eps = epsilon_projector(N);
  EXPECT_EQ(tensor(eps, eps), e2);
}

INSTANTIATE_TEST_SUITE_P(Levels, GroupRingSuite, ::testing::Values(3, 4, 5, 7));
