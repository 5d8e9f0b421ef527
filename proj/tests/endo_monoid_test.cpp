#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "motive/endo_monoid.hpp"

using namespace motive;

namespace {

std::vector<SurfEnd> all_surf_ends(int N) {
  std::vector<SurfEnd> out;
  for (const GElem& g : enumerate_group(N)) out.push_back(SurfEnd::automorphism(g));
  for (int b1 = 0; b1 < N; ++b1)
    for (int b2 = 0; b2 < N; ++b2) out.push_back(SurfEnd::collapse_to(N, b1, b2));
  return out;
}

}  // namespace

TEST(SurfEnd, CompositionMatchesPointwiseAction) {
  const int N = 3;
  auto ends = all_surf_ends(N);
  for (const auto& f : ends)
    for (const auto& h : ends) {
      SurfEnd fh = surf_compose(f, h);
      for (int p1 = 0; p1 < N; ++p1)
        for (int p2 = 0; p2 < N; ++p2) {
          auto [q1, q2] = h.act_on_point(p1, p2);
          EXPECT_EQ(fh.act_on_point(p1, p2), f.act_on_point(q1, q2));
        }
    }
}

TEST(SurfEnd, AssociativeExhaustively) {
  for (int N : {3, 4}) {
    auto ends = all_surf_ends(N);
    for (const auto& a : ends)
      for (const auto& b : ends)
        for (const auto& c : ends)
          ASSERT_EQ(surf_compose(surf_compose(a, b), c), surf_compose(a, surf_compose(b, c)));
  }
}

TEST(TensorEnd, AssociativeOnSample) {
  const int N = 3;
  auto ends = all_surf_ends(N);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
  auto draw = [&] { return TensorEnd{ends[pick(rng)], ends[pick(rng)], static_cast<bool>(rng() & 1)}; };
  for (int i = 0; i < 20000; ++i) {
    TensorEnd a = draw(), b = draw(), c = draw();
    ASSERT_EQ(tensor_compose(tensor_compose(a, b), c), tensor_compose(a, tensor_compose(b, c)));
  }
  TensorEnd s = TensorEnd::sigma(N);
  EXPECT_EQ(tensor_compose(s, s), TensorEnd::identity(N));
  for (int i = 0; i < 200; ++i) {
    TensorEnd a = draw();
    EXPECT_EQ(swap_conjugate(a), tensor_compose(s, tensor_compose(a, s)));
  }
}

TEST(AffEnd, CompositionAndInverse) {
  const int N = 5;
  for (long n : {-2, -1, 1, 3})
    for (int b = 0; b < N; ++b) {
      AffEnd f = AffEnd::make(N, n, b, 2 * b);
      AffEnd g = AffEnd::make(N, -n, 1, b);
      AffEnd fg = aff_compose(f, g);
      EXPECT_EQ(fg.n, -n * n);
      if (f.is_invertible()) {
        EXPECT_EQ(aff_compose(f, f.inverse()), AffEnd::identity(N));
      }
    }
}

TEST(StructureIdentities, AllPass) {
  for (int N : {3, 4, 5, 8}) {
    Certificate c = verify_structure_identities(N);
    EXPECT_TRUE(c.passed()) << N;
    EXPECT_FALSE(c.entries.empty());
  }
}
