#include <gtest/gtest.h>

#include <random>

#include "motive/level_arithmetic.hpp"
#include "motive/threefold_calculus.hpp"

using namespace motive;

namespace {

TCorr atom(int N, const TAtom& a) { return TCorr::of(N, a); }

struct Sampler {
  int N;
  std::vector<SurfAtom> factors;
  std::mt19937_64 rng{42};

  explicit Sampler(int level) : N(level), factors(restricted_factor_atoms(level)) {}

  TAtom draw() {
    std::uniform_int_distribution<std::size_t> pick(0, factors.size() - 1);
    for (;;) {
      SurfAtom l = factors[pick(rng)], r = factors[pick(rng)];
      if (l.kind == SurfKind::Vert && r.kind == SurfKind::Vert) continue;
      return TAtom::make(l, r, rng() & 1);
    }
  }
};

std::vector<SurfTensorSum> ten_projectors(const ThreefoldProjectors& p, int N) {
  auto [alt, sym] = split_sym_alt(N);
  std::vector<SurfTensorSum> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(i == 1 && j == 1)) out.push_back(p.pi[i][j]);
  out.push_back(alt);
  out.push_back(sym);
  return out;
}

}  // namespace

TEST(Threefold, SigmaAndIdentity) {
  const int N = 3;
  EXPECT_EQ(t_compose(t_sigma(N), t_sigma(N)), t_identity(N));
  Sampler s(N);
  for (int i = 0; i < 200; ++i) {
    TCorr x = atom(N, s.draw());
    EXPECT_EQ(t_compose(t_identity(N), x), x);
    EXPECT_EQ(t_compose(x, t_identity(N)), x);
    EXPECT_EQ(swap_conjugate(x), t_compose(t_sigma(N), t_compose(x, t_sigma(N))));
    EXPECT_EQ(transpose(transpose(x)), x);
  }
}

TEST(Threefold, AssociativityOnSample) {
  const int N = 3;
  Sampler s(N);
  for (int i = 0; i < 5000; ++i) {
    TCorr a = atom(N, s.draw()), b = atom(N, s.draw()), c = atom(N, s.draw());
    ASSERT_EQ(t_compose(t_compose(a, b), c), t_compose(a, t_compose(b, c)));
  }
}

TEST(Threefold, FactoredProductMatchesAtomProduct) {
  const int N = 3;
  Sampler s(N);
  for (int i = 0; i < 500; ++i) {
    TAtom x = s.draw(), y = s.draw();
    SurfTensorSum fx = SurfTensorSum::pure(surf_atom(N, x.left), surf_atom(N, x.right), x.swap);
    SurfTensorSum fy = SurfTensorSum::pure(surf_atom(N, y.left), surf_atom(N, y.right), y.swap);
    ASSERT_EQ(expand(factored_compose(fx, fy)), t_compose(atom(N, x), atom(N, y)));
  }
}

TEST(Threefold, DivisorActionCoherenceOnSample) {
  for (int N : {3, 4}) {
    Sampler s(N);
    std::vector<T3Div> basis{T3Div::generic()};
    for (int c : {0, static_cast<int>(cusp_count(N)) - 1})
      for (const T3Div& d : cusp_components(N, c)) basis.push_back(d);
    std::uniform_int_distribution<std::size_t> pb(0, basis.size() - 1);
    for (int i = 0; i < 3000; ++i) {
      TCorr x = atom(N, s.draw()), y = atom(N, s.draw());
      ThreefoldDivClass z = ThreefoldDivClass::of(N, basis[pb(s.rng)]);
      ASSERT_EQ(act_on_threefold_divisor(t_compose(x, y), z),
                act_on_threefold_divisor(x, act_on_threefold_divisor(y, z)))
          << render(x) << " o " << render(y);
    }
  }
}

TEST(Threefold, RestrictionIsMultiplicative) {
  const int N = 3;
  Sampler s(N);
  for (int i = 0; i < 2000; ++i) {
    TCorr x = atom(N, s.draw()), y = atom(N, s.draw());
    ASSERT_EQ(restrict_to_open_t(t_compose(x, y)),
              open_t_compose(restrict_to_open_t(x), restrict_to_open_t(y)));
  }
}

class ThreefoldProjectorSuite : public ::testing::TestWithParam<int> {};

TEST_P(ThreefoldProjectorSuite, TenProjectorsOrthogonal) {
  int N = GetParam();
  ThreefoldProjectors p = build_pi_tildes(N);
  auto ps = ten_projectors(p, N);
  std::vector<TCorr> ex;
  for (const auto& x : ps) ex.push_back(expand(x));
  TCorr zero(N);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      TCorr prod = expand(factored_compose(ps[i], ps[j]));
      EXPECT_EQ(prod, i == j ? ex[i] : zero) << i << "," << j;
    }
}

TEST_P(ThreefoldProjectorSuite, TransposeAndSwap) {
  int N = GetParam();
  ThreefoldProjectors p = build_pi_tildes(N);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(expand(transpose(p.pi[i][j])), expand(p.pi[2 - i][2 - j]));
      EXPECT_EQ(expand(swap_conjugate(p.pi[i][j])), expand(p.pi[j][i]));
    }
  SurfTensorSum sum(N);
  for (const auto& row : p.pi)
    for (const auto& x : row) sum += x;
  EXPECT_EQ(expand(sum + threefold_residual(N)), t_identity(N));
}

TEST_P(ThreefoldProjectorSuite, RestrictionOfProjectorsIsTensorOfSurfaceRestrictions) {
  int N = GetParam();
  SurfaceProjectors bar = build_pi_bars(N);
  ThreefoldProjectors p = build_pi_tildes(N);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(expand(restrict_factored(p.pi[i][j])),
                open_tensor(restrict_to_open(bar.pi[i]), restrict_to_open(bar.pi[j])))
          << i << j;
}

INSTANTIATE_TEST_SUITE_P(Levels, ThreefoldProjectorSuite, ::testing::Values(3, 4));

TEST(Threefold, CertificatePasses) {
  for (int N : {3, 4}) {
    Certificate c = threefold_certificate(N);
    for (const auto& e : c.entries) EXPECT_NE(e.status, Status::Fail) << e.name;
  }
}
