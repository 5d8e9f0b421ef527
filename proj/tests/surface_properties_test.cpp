#include <gtest/gtest.h>

#include <random>
#include <string>

#include "motive/errors.hpp"
#include "motive/surface_calculus.hpp"

using namespace motive;

namespace {

// Either both sides agree or both raise DegreeOverflow.
::testing::AssertionResult coherent(int N, const SurfAtom& x, const SurfAtom& y, const DivBasis& z) {
  SurfCorr cx = surf_atom(N, x), cy = surf_atom(N, y);
  DivClass dz = DivClass::of(N, z);
  std::string lhs, rhs;
  bool ok = true;
  try {
    lhs = act_on_divisor(compose(cx, cy), dz).to_string();
  } catch (const DegreeOverflow&) {
    lhs = "overflow";
  }
  try {
    rhs = act_on_divisor(cx, act_on_divisor(cy, dz)).to_string();
  } catch (const DegreeOverflow&) {
    rhs = "overflow";
  }
  ok = lhs == rhs;
  if (ok) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << x.to_string() << " o " << y.to_string() << " on " << z.to_string()
                                       << ": " << lhs << " vs " << rhs;
}

}  // namespace

TEST(SurfaceCoherence, ExhaustiveAtLevelThree) {
  const int N = 3;
  auto atoms = surface_atom_universe(N);
  auto basis = divisor_basis(N);
  for (const auto& x : atoms)
    for (const auto& y : atoms)
      for (const auto& z : basis) ASSERT_TRUE(coherent(N, x, y, z));
}

TEST(SurfaceCoherence, RandomAtLevelFive) {
  const int N = 5;
  auto atoms = surface_atom_universe(N);
  auto basis = divisor_basis(N);
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::size_t> pa(0, atoms.size() - 1), pb(0, basis.size() - 1);
  for (int i = 0; i < 10000; ++i) ASSERT_TRUE(coherent(N, atoms[pa(rng)], atoms[pa(rng)], basis[pb(rng)]));
}

// Abstract reducer for words in p0, p2 under p_i^2 = p_i, p2 p0 = 0,
// p0 p2 = V, V^2 = 0. Returns "", "0", "2" or "02" ("" means zero).
std::string reduce_word(const std::string& w) {
  std::string r;
  for (char c : w)
    if (r.empty() || r.back() != c) r.push_back(c);
  if (r.find("20") != std::string::npos) return "";
  return r;
}

TEST(WordAlgebra, ReducerAgreesWithEngine) {
  for (int N : {3, 4}) {
    SurfCorr p0 = p_bar_zero(N), p2 = p_bar_two(N);
    std::size_t checked = 0;
    for (int len = 1; len <= 6; ++len)
      for (int bits = 0; bits < (1 << len); ++bits) {
        std::string w;
        SurfCorr value = surf_identity(N);
        for (int i = 0; i < len; ++i) {
          bool two = (bits >> i) & 1;
          w.push_back(two ? '2' : '0');
          value = compose(value, two ? p2 : p0);
        }
        std::string r = reduce_word(w);
        SurfCorr expected(N);
        if (r == "0") expected = p0;
        if (r == "2") expected = p2;
        if (r == "02") expected = vertical(N);
        EXPECT_EQ(value, expected) << w;
        ++checked;
      }
    EXPECT_EQ(checked, 126u);
  }
}
