#include "motive/threefold_calculus.hpp"

#include <stdexcept>

#include "motive/level_arithmetic.hpp"
#include "motive/symmetry_algebra.hpp"

namespace motive {

TAtom TAtom::make(const SurfAtom& left, const SurfAtom& right, bool swap) {
  if (left.kind == SurfKind::CuspProd || right.kind == SurfKind::CuspProd)
    throw std::invalid_argument("cusp products are not tensor factors");
  if (left.kind == SurfKind::Vert && right.kind == SurfKind::Vert)
    throw std::invalid_argument("V (x) V vanishes and is not an atom");
  return {left, right, swap};
}

int TAtom::support_label() const {
  if (left.kind == SurfKind::Vert) return 1;
  if (right.kind == SurfKind::Vert) return 2;
  return 0;
}

std::uint64_t TAtom::hash() const {
  std::uint64_t h = left.hash() * 0x9e3779b97f4a7c15ULL;
  h ^= (right.hash() << 7) | (right.hash() >> 57);
  return h ^ static_cast<std::uint64_t>(swap);
}

std::string TAtom::to_string() const {
  return "T(" + left.to_string() + "," + right.to_string() + ")" + (swap ? " . sigma" : "");
}

TCorr t_identity(int level) {
  SurfAtom id = SurfAtom::graph(SurfEnd::identity(level));
  return TCorr::of(level, TAtom{id, id, false});
}

TCorr t_sigma(int level) {
  SurfAtom id = SurfAtom::graph(SurfEnd::identity(level));
  return TCorr::of(level, TAtom{id, id, true});
}

TCorr tensor(const SurfCorr& a, const SurfCorr& b, bool swap) {
  require_same_level(a.level(), b.level());
  TCorr r(a.level());
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      if (x.kind == SurfKind::Vert && y.kind == SurfKind::Vert) continue;
      r.add(TAtom::make(x, y, swap), cx * cy);
    }
  return r;
}

TCorr t_compose(const TCorr& after, const TCorr& before) {
  const int level = after.level();
  return compose_bilinear(after, before, [level](const TAtom& x, const TAtom& y, auto&& emit) {
    compose_t_atoms(level, x, y, emit);
  });
}

TCorr transpose(const TCorr& x) {
  const int level = x.level();
  TCorr r(level);
  for (const auto& [a, c] : x) {
    SurfAtom l = transpose_atom(level, a.left), rt = transpose_atom(level, a.right);
    r.add(a.swap ? TAtom{rt, l, true} : TAtom{l, rt, false}, c);
  }
  return r;
}

TCorr swap_conjugate(const TCorr& x) {
  TCorr r(x.level());
  for (const auto& [a, c] : x) r.add(TAtom{a.right, a.left, a.swap}, c);
  return r;
}

std::string render(const TCorr& x) {
  return x.render([](const TAtom& a) { return a.to_string(); });
}

// --- factored ------------------------------------------------------------------

SurfTensorSum factored_compose(const SurfTensorSum& after, const SurfTensorSum& before) {
  return factored_compose(after, before, [](const SurfCorr& a, const SurfCorr& b) { return compose(a, b); });
}

SurfTensorSum transpose(const SurfTensorSum& x) {
  SurfTensorSum r(x.level());
  for (const auto& t : x.terms()) {
    SurfCorr l = transpose(t.left), rt = transpose(t.right);
    if (t.swap)
      r.push(t.coeff, std::move(rt), std::move(l), true);
    else
      r.push(t.coeff, std::move(l), std::move(rt), false);
  }
  return r;
}

SurfTensorSum swap_conjugate(const SurfTensorSum& x) {
  SurfTensorSum r(x.level());
  for (const auto& t : x.terms()) r.push(t.coeff, t.right, t.left, t.swap);
  return r;
}

SurfTensorSum t_identity_factored(int level) {
  return SurfTensorSum::pure(surf_identity(level), surf_identity(level));
}

SurfTensorSum t_sigma_factored(int level) {
  return SurfTensorSum::pure(surf_identity(level), surf_identity(level), true);
}

TCorr expand(const SurfTensorSum& x) {
  TCorr r(x.level());
  for (const auto& t : x.terms())
    for (const auto& [a, ca] : t.left) {
      Rational k = t.coeff * ca;
      for (const auto& [b, cb] : t.right) {
        if (a.kind == SurfKind::Vert && b.kind == SurfKind::Vert) continue;
        r.add(TAtom::make(a, b, t.swap), k * cb);
      }
    }
  return r;
}

OpenTensorSum restrict_factored(const SurfTensorSum& x) {
  OpenTensorSum r(x.level());
  for (const auto& t : x.terms()) r.push(t.coeff, restrict_to_open(t.left), restrict_to_open(t.right), t.swap);
  return r;
}

OpenTensorSum open_factored_compose(const OpenTensorSum& after, const OpenTensorSum& before) {
  return factored_compose(after, before, [](const OpenCorr& a, const OpenCorr& b) { return open_compose(a, b); });
}

OpenTCorr expand(const OpenTensorSum& x) {
  OpenTCorr r(x.level());
  for (const auto& t : x.terms())
    for (const auto& [a, ca] : t.left) {
      Rational k = t.coeff * ca;
      for (const auto& [b, cb] : t.right) r.add(OpenTAtom{a, b, t.swap}, k * cb);
    }
  return r;
}

OpenTCorr restrict_to_open_t(const TCorr& x) {
  const int level = x.level();
  OpenTCorr r(level);
  auto restrict_one = [level](const SurfAtom& a) {
    SurfEnd f = a.endo(level);
    OpenAtom o = restrict_endo(f);
    return a.kind == SurfKind::TGraph ? OpenAtom::tgraph(o.f) : o;
  };
  for (const auto& [a, c] : x) {
    if (a.support_label() != 0) continue;
    r.add(OpenTAtom{restrict_one(a.left), restrict_one(a.right), a.swap}, c);
  }
  return r;
}

// --- projectors ----------------------------------------------------------------

ThreefoldProjectors build_pi_tildes(int level) {
  require_level(level);
  ThreefoldProjectors P;
  P.level = level;
  SurfaceProjectors S = build_pi_bars(level);
  SurfCorr id = surf_identity(level);
  SurfCorr half_v = Rational(1, 2) * vertical(level);
  P.b1 = SurfTensorSum::pure(half_v, id);
  P.b2 = SurfTensorSum::pure(id, half_v);
  // pi~_0^(1) = t(Gamma mu~(0,1)) - b(1), pi~_2^(1) = Gamma mu~(0,1) - b(1).
  P.factor[0][0] = SurfTensorSum::pure(p_bar_zero(level), id) - P.b1;
  P.factor[0][1] = SurfTensorSum::pure(S.pi[1], id);
  P.factor[0][2] = SurfTensorSum::pure(p_bar_two(level), id) - P.b1;
  P.factor[1][0] = SurfTensorSum::pure(id, p_bar_zero(level)) - P.b2;
  P.factor[1][1] = SurfTensorSum::pure(id, S.pi[1]);
  P.factor[1][2] = SurfTensorSum::pure(id, p_bar_two(level)) - P.b2;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) P.pi[i][j] = factored_compose(P.factor[0][i], P.factor[1][j]);
  return P;
}

std::pair<SurfTensorSum, SurfTensorSum> split_sym_alt(int level) {
  ThreefoldProjectors P = build_pi_tildes(level);
  SurfTensorSum half_id = Rational(1, 2) * t_identity_factored(level);
  SurfTensorSum half_sigma = Rational(1, 2) * t_sigma_factored(level);
  SurfTensorSum a2 = half_id + half_sigma, s2 = half_id - half_sigma;
  return {factored_compose(a2, P.pi[1][1]), factored_compose(s2, P.pi[1][1])};
}

SurfTensorSum threefold_residual(int level) {
  ThreefoldProjectors P = build_pi_tildes(level);
  SurfTensorSum r = t_identity_factored(level);
  for (const auto& row : P.pi)
    for (const auto& p : row) r -= p;
  return r;
}

// --- divisors ------------------------------------------------------------------

T3Div T3Div::theta(int cusp, int m, int n) {
  return {T3Kind::ThetaInt, static_cast<std::uint16_t>(cusp), static_cast<std::uint8_t>(m),
          static_cast<std::uint8_t>(n)};
}

T3Div T3Div::quadric(int cusp, int m, int n) {
  return {T3Kind::ThetaHalf, static_cast<std::uint16_t>(cusp), static_cast<std::uint8_t>(m),
          static_cast<std::uint8_t>(n)};
}

std::string T3Div::to_string() const {
  auto i = [](int v) { return std::to_string(v); };
  switch (kind) {
    case T3Kind::Generic: return "F3";
    case T3Kind::ThetaInt: return "Theta(" + i(cusp) + "," + i(m) + "," + i(n) + ")";
    case T3Kind::ThetaHalf: return "Theta(" + i(cusp) + "," + i(m) + "+1/2," + i(n) + "+1/2)";
  }
  return "?";
}

ThreefoldDivClass full_cusp_fiber3(int level, int cusp) {
  ThreefoldDivClass d(level);
  for (int m = 0; m < level; ++m)
    for (int n = 0; n < level; ++n) {
      d.add(T3Div::theta(cusp, m, n), 1);
      d.add(T3Div::quadric(cusp, m, n), 2);
    }
  return d;
}

std::vector<T3Div> cusp_components(int level, int cusp) {
  std::vector<T3Div> out;
  for (int m = 0; m < level; ++m)
    for (int n = 0; n < level; ++n) out.push_back(T3Div::theta(cusp, m, n));
  for (int m = 0; m < level; ++m)
    for (int n = 0; n < level; ++n) out.push_back(T3Div::quadric(cusp, m, n));
  return out;
}

std::vector<SurfAtom> restricted_factor_atoms(int level) {
  std::vector<SurfAtom> out;
  for (const SurfAtom& a : surface_atom_universe(level))
    if (a.kind != SurfKind::CuspProd) out.push_back(a);
  return out;
}

namespace {

// Components over the k-th component of the second factor's polygon: the
// Theta(m', k) and the quadrics on either side of it.
void add_column(ThreefoldDivClass& out, int level, int cusp, int k) {
  for (int mp = 0; mp < level; ++mp) {
    out.add(T3Div::theta(cusp, mp, k), 1);
    out.add(T3Div::quadric(cusp, mp, k), 1);
    out.add(T3Div::quadric(cusp, mp, mod(k - 1, level)), 1);
  }
}

void add_row(ThreefoldDivClass& out, int level, int cusp, int k) {
  for (int np = 0; np < level; ++np) {
    out.add(T3Div::theta(cusp, k, np), 1);
    out.add(T3Div::quadric(cusp, k, np), 1);
    out.add(T3Div::quadric(cusp, mod(k - 1, level), np), 1);
  }
}

}  // namespace

ThreefoldDivClass act_t_atom_on_basis(int level, const TAtom& a, const T3Div& z0) {
  ThreefoldDivClass out(level);
  auto kills = [](const SurfAtom& f) {
    return f.kind == SurfKind::Vert || f.kind == SurfKind::CuspProd || f.is_collapse_graph();
  };
  if (kills(a.left) || kills(a.right)) return out;
  T3Div z = z0;
  if (a.swap) std::swap(z.m, z.n);
  if (z.kind == T3Kind::Generic) {
    out.add(z, 1);
    return out;
  }
  const bool tl = a.left.kind == SurfKind::TGraph, tr = a.right.kind == SurfKind::TGraph;
  if (z.kind == T3Kind::ThetaHalf) {
    // Quadrics never survive a collapse pullback.
    if (tl || tr) return out;
    GElem g = a.left.endo(level).g, h = a.right.endo(level).g;
    out.add(T3Div::quadric(z.cusp, g.act_on_half_index(z.m), h.act_on_half_index(z.n)), 1);
    return out;
  }
  if (tl && tr) {
    if (z.m == a.left.b1 && z.n == a.right.b1) out += full_cusp_fiber3(level, z.cusp);
    return out;
  }
  if (tl) {
    if (z.m == a.left.b1) add_column(out, level, z.cusp, a.right.endo(level).g.act_on_index(z.n));
    return out;
  }
  if (tr) {
    if (z.n == a.right.b1) add_row(out, level, z.cusp, a.left.endo(level).g.act_on_index(z.m));
    return out;
  }
  GElem g = a.left.endo(level).g, h = a.right.endo(level).g;
  out.add(T3Div::theta(z.cusp, g.act_on_index(z.m), h.act_on_index(z.n)), 1);
  return out;
}

ThreefoldDivClass act_on_threefold_divisor(const TCorr& x, const ThreefoldDivClass& z) {
  require_same_level(x.level(), z.level());
  ThreefoldDivClass out(x.level());
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : z) {
      ThreefoldDivClass img = act_t_atom_on_basis(x.level(), a, b);
      for (const auto& [t, ct] : img) out.add(t, ca * cb * ct);
    }
  return out;
}

ThreefoldDivClass act_on_threefold_divisor(const SurfTensorSum& x, const ThreefoldDivClass& z) {
  return act_on_threefold_divisor(expand(x), z);
}

// --- certificate ---------------------------------------------------------------

namespace {

struct Named {
  std::string name;
  SurfTensorSum value;
};

std::string idx(int i, int j) { return std::to_string(i) + std::to_string(j); }

}  // namespace

Certificate threefold_certificate(int level) {
  require_level(level);
  Certificate cert;
  cert.subject = "threefold";
  cert.level = level;

  auto expect = [&](const std::string& name, const char* lemma, const SurfTensorSum& lhs, const SurfTensorSum& rhs) {
    TCorr l = expand(lhs), r = expand(rhs);
    cert.add(name, lemma, render(l), render(r), l == r);
  };
  auto expect_div = [&](const std::string& name, const char* lemma, const ThreefoldDivClass& lhs,
                        const ThreefoldDivClass& rhs) {
    auto show = [](const ThreefoldDivClass& d) { return d.render([](const T3Div& b) { return b.to_string(); }); };
    cert.add(name, lemma, show(lhs), show(rhs), lhs == rhs);
  };

  const SurfTensorSum zero(level);
  const SurfTensorSum id = t_identity_factored(level);
  const SurfTensorSum sigma = t_sigma_factored(level);
  ThreefoldProjectors P = build_pi_tildes(level);
  auto [alt, sym] = split_sym_alt(level);

  const char* kRel = "relations among the generating correspondences";
  SurfCorr sid = surf_identity(level);
  SurfTensorSum mu01 = SurfTensorSum::pure(p_bar_two(level), sid);
  SurfTensorSum mu10 = SurfTensorSum::pure(sid, p_bar_two(level));
  SurfTensorSum tmu01 = transpose(mu01), tmu10 = transpose(mu10);
  expect("b1 . b2 = 0", kRel, factored_compose(P.b1, P.b2), zero);
  expect("b2 . b1 = 0", kRel, factored_compose(P.b2, P.b1), zero);
  expect("b1 . b1 = 0", kRel, factored_compose(P.b1, P.b1), zero);
  expect("b2 . b2 = 0", kRel, factored_compose(P.b2, P.b2), zero);
  expect("sigma . sigma = Delta", kRel, factored_compose(sigma, sigma), id);
  expect("t(mu01) . mu10 = mu10 . t(mu01)", kRel, factored_compose(tmu01, mu10), factored_compose(mu10, tmu01));
  expect("t(mu10) . mu01 = mu01 . t(mu10)", kRel, factored_compose(tmu10, mu01), factored_compose(mu01, tmu10));
  expect("mu01 . mu10 = mu10 . mu01", kRel, factored_compose(mu01, mu10), factored_compose(mu10, mu01));
  expect("t(mu01) . t(mu10) = t(mu10) . t(mu01)", kRel, factored_compose(tmu01, tmu10),
         factored_compose(tmu10, tmu01));

  const char* kFac = "per-factor projectors are orthogonal idempotents";
  for (int j = 0; j < 2; ++j)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        std::string n = "pi" + std::to_string(a) + "^(" + std::to_string(j + 1) + ") . pi" + std::to_string(b) +
                        "^(" + std::to_string(j + 1) + ")";
        expect(n, kFac, factored_compose(P.factor[j][a], P.factor[j][b]), a == b ? P.factor[j][a] : zero);
      }
  const char* kComm = "projectors on different factors commute";
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      expect("pi" + std::to_string(a) + "^(1) . pi" + std::to_string(b) + "^(2) commute", kComm,
             factored_compose(P.factor[0][a], P.factor[1][b]), factored_compose(P.factor[1][b], P.factor[0][a]));

  std::vector<Named> family;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(i == 1 && j == 1)) family.push_back({"pi~" + idx(i, j), P.pi[i][j]});
  family.push_back({"alt11", alt});
  family.push_back({"sym11", sym});

  const char* kOrth = "mutually orthogonal projectors on the fibre square";
  for (const auto& x : family)
    for (const auto& y : family) {
      bool same = &x == &y;
      expect(x.name + " . " + y.name + (same ? " = " + x.name : " = 0"), kOrth, factored_compose(x.value, y.value),
             same ? x.value : zero);
    }

  const char* kSplit = "symmetric and antisymmetric parts";
  expect("alt11 + sym11 = pi~11", kSplit, alt + sym, P.pi[1][1]);
  SurfTensorSum a2 = Rational(1, 2) * (id + sigma);
  expect("A2 . pi~11 = pi~11 . A2", kSplit, factored_compose(a2, P.pi[1][1]), factored_compose(P.pi[1][1], a2));
  expect("pi~11 . pi~11 = pi~11", kSplit, factored_compose(P.pi[1][1], P.pi[1][1]), P.pi[1][1]);

  const char* kT = "transpose symmetry";
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      expect("t(pi~" + idx(i, j) + ") = pi~" + idx(2 - i, 2 - j), kT, transpose(P.pi[i][j]), P.pi[2 - i][2 - j]);
  expect("t(alt11) = alt11", kT, transpose(alt), alt);
  expect("t(sym11) = sym11", kT, transpose(sym), sym);

  const char* kSwap = "swap equivariance";
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      SurfTensorSum conj = factored_compose(factored_compose(sigma, P.pi[i][j]), sigma);
      expect("sigma . pi~" + idx(i, j) + " . sigma = pi~" + idx(j, i), kSwap, conj, P.pi[j][i]);
      expect("swap_conjugate(pi~" + idx(i, j) + ") = pi~" + idx(j, i), kSwap, swap_conjugate(P.pi[i][j]),
             P.pi[j][i]);
    }

  const char* kRes = "residual projector of the fibre square";
  SurfTensorSum res = threefold_residual(level);
  expect("piInf~ . piInf~ = piInf~", kRes, factored_compose(res, res), res);
  for (const auto& x : family) {
    expect("piInf~ . " + x.name + " = 0", kRes, factored_compose(res, x.value), zero);
    expect(x.name + " . piInf~ = 0", kRes, factored_compose(x.value, res), zero);
  }
  cert.record("piInf~ structure", "structure of the residual projector of the fibre square",
              "the residual projector is a sum over cusps of projectors built from fibre components and "
              "cycles Z_c(m) (existence proved with exact sequences; recorded, not re-derived)");

  const char* kPsi = "restriction to the smooth part is the tensor of surface restrictions";
  SurfaceProjectors S = build_pi_bars(level);
  std::array<OpenCorr, 3> R{restrict_to_open(S.pi[0]), restrict_to_open(S.pi[1]), restrict_to_open(S.pi[2])};
  auto expect_open = [&](const std::string& name, const char* lemma, const OpenTCorr& lhs, const OpenTCorr& rhs) {
    cert.add(name, lemma, render(lhs), render(rhs), lhs == rhs);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      expect_open("psi2(pi~" + idx(i, j) + ") = psi(pi" + std::to_string(i) + ") (x) psi(pi" + std::to_string(j) + ")",
                  kPsi, restrict_to_open_t(expand(P.pi[i][j])), open_tensor(R[i], R[j]));
  OpenTCorr ozero(level);
  expect_open("psi2(b1) = 0", kPsi, restrict_to_open_t(expand(P.b1)), ozero);
  expect_open("psi2(b2) = 0", kPsi, restrict_to_open_t(expand(P.b2)), ozero);
  std::array<OpenTensorSum, 5> graded;
  for (auto& g : graded) g = OpenTensorSum(level);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) graded[i + j] += restrict_factored(P.pi[i][j]);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      OpenTCorr prod = expand(open_factored_compose(graded[a], graded[b]));
      expect_open("psi2 graded " + std::to_string(a) + " . " + std::to_string(b), kPsi, prod,
                  a == b ? expand(graded[a]) : ozero);
    }
  cert.record("sum of graded psi2 pieces = Delta", "restriction of the sum of the projectors",
              "the graded restricted pieces are the canonical relative projectors of the fibre square and sum to "
              "the diagonal (Kunneth for relative motives; taken as an axiom)");

  const char* kAct = "divisor action on the fibre square";
  ThreefoldDivClass F3 = ThreefoldDivClass::of(level, T3Div::generic());
  ThreefoldDivClass none(level);
  std::vector<int> cusps{0};
  if (cusp_count(level) > 1) cusps.push_back(static_cast<int>(cusp_count(level) - 1));
  for (const auto& x : family) {
    TCorr ex = expand(x.value);
    bool is00 = x.name == "pi~00";
    expect_div(x.name + "(F3)", kAct, act_on_threefold_divisor(ex, F3), is00 ? F3 : none);
    for (int c : cusps)
      for (const T3Div& z : cusp_components(level, c)) {
        ThreefoldDivClass want =
            (is00 && z.kind == T3Kind::ThetaInt && z.m == 0 && z.n == 0) ? full_cusp_fiber3(level, c) : none;
        expect_div(x.name + "(" + z.to_string() + ")", kAct,
                   act_on_threefold_divisor(ex, ThreefoldDivClass::of(level, z)), want);
      }
  }
  // Averaging and antisymmetrizing the first index.
  LambdaTheta lt = lambda_theta(level);
  TCorr theta1 = tensor(image_of(lt.theta), sid), lambda1 = tensor(image_of(lt.lambda), sid);
  for (const T3Div& z : cusp_components(level, 0)) {
    ThreefoldDivClass avg(level), anti(level);
    for (int k = 0; k < level; ++k)
      avg.add(z.kind == T3Kind::ThetaInt ? T3Div::theta(0, k, z.n) : T3Div::quadric(0, k, z.n), Rational(1, level));
    anti.add(z, Rational(1, 2));
    GElem inv = GElem::inversion(level);
    anti.add(z.kind == T3Kind::ThetaInt ? T3Div::theta(0, inv.act_on_index(z.m), z.n)
                                        : T3Div::quadric(0, inv.act_on_half_index(z.m), z.n),
             Rational(-1, 2));
    ThreefoldDivClass zz = ThreefoldDivClass::of(level, z);
    expect_div("theta~(1)(" + z.to_string() + ")", kAct, act_on_threefold_divisor(theta1, zz), avg);
    expect_div("lambda~(1)(" + z.to_string() + ")", kAct, act_on_threefold_divisor(lambda1, zz), anti);
  }
  const char* kResAct = "residual acts as the identity where the finite part vanishes";
  {
    SurfTensorSum fin(level);
    for (const auto& row : P.pi)
      for (const auto& p : row) fin += p;
    TCorr ef = expand(fin), er = expand(res);
    for (const T3Div& z : cusp_components(level, 0)) {
      ThreefoldDivClass zz = ThreefoldDivClass::of(level, z);
      if (!act_on_threefold_divisor(ef, zz).is_zero()) continue;
      expect_div("piInf~(" + z.to_string() + ") = itself", kResAct, act_on_threefold_divisor(er, zz), zz);
    }
  }

  if (level <= 5) {
    const char* kGen = "factored and atom-level products agree";
    auto find = [&](const std::string& n) -> const Named& {
      for (const auto& f : family)
        if (f.name == n) return f;
      throw std::logic_error("unknown projector " + n);
    };
    for (const char* xn : {"pi~00", "pi~01", "pi~20", "alt11"})
      for (const char* yn : {"pi~00", "pi~02", "alt11", "sym11"}) {
        const Named& x = find(xn);
        const Named& y = find(yn);
        TCorr generic = t_compose(expand(x.value), expand(y.value));
        TCorr factored = expand(factored_compose(x.value, y.value));
        cert.add(x.name + " . " + y.name + " (atom level)", kGen, render(generic), render(factored),
                 generic == factored);
      }
  }
  return cert;
}

}  // namespace motive
