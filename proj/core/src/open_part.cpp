#include "motive/open_part.hpp"

#include "motive/level_arithmetic.hpp"
#include "motive/symmetry_algebra.hpp"

namespace motive {

OpenAtom OpenAtom::tgraph(const AffEnd& f) {
  if (f.is_invertible()) return graph(f.inverse());
  return {true, f};
}

std::uint64_t OpenAtom::hash() const {
  return static_cast<std::uint64_t>(transposed) | (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f.n)) << 1) |
         (static_cast<std::uint64_t>(f.b1) << 33) | (static_cast<std::uint64_t>(f.b2) << 45);
}

std::string OpenAtom::to_string() const {
  std::string body =
      "A(" + std::to_string(f.n) + "," + std::to_string(f.b1) + "," + std::to_string(f.b2) + ")";
  return transposed ? "t(" + body + ")" : body;
}

OpenCorr open_compose(const OpenCorr& after, const OpenCorr& before) {
  return compose_bilinear(after, before,
                          [](const OpenAtom& x, const OpenAtom& y, auto&& emit) { open_compose_atoms(x, y, emit); });
}

OpenCorr open_identity(int level) { return OpenCorr::of(level, OpenAtom::graph(AffEnd::identity(level))); }

std::string render(const OpenCorr& x) {
  return x.render([](const OpenAtom& a) { return a.to_string(); });
}

OpenAtom restrict_endo(const SurfEnd& f) {
  if (f.collapse) return OpenAtom::graph(AffEnd::make(f.level(), 0, f.g.b1, f.g.b2));
  return OpenAtom::graph(AffEnd::make(f.level(), f.g.s, f.g.b1, f.g.b2));
}

OpenCorr restrict_to_open(const SurfCorr& x) {
  OpenCorr r(x.level());
  for (const auto& [a, c] : x) {
    switch (a.kind) {
      case SurfKind::Graph:
        r.add(restrict_endo(a.endo(x.level())), c);
        break;
      case SurfKind::TGraph:
        r.add(OpenAtom::tgraph(restrict_endo(a.endo(x.level())).f), c);
        break;
      case SurfKind::Vert:
      case SurfKind::CuspProd:
        break;
    }
  }
  return r;
}

std::uint64_t OpenTAtom::hash() const {
  return left.hash() * 0x9e3779b97f4a7c15ULL ^ (right.hash() << 1) ^ static_cast<std::uint64_t>(swap);
}

std::string OpenTAtom::to_string() const {
  return "T(" + left.to_string() + "," + right.to_string() + ")" + (swap ? " . sigma" : "");
}

OpenTCorr open_tensor(const OpenCorr& a, const OpenCorr& b) {
  require_same_level(a.level(), b.level());
  OpenTCorr r(a.level());
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) r.add(OpenTAtom{x, y, false}, cx * cy);
  return r;
}

OpenTCorr open_t_compose(const OpenTCorr& after, const OpenTCorr& before) {
  return compose_bilinear(after, before, [](const OpenTAtom& x, const OpenTAtom& y, auto&& emit) {
    const OpenAtom& u = x.swap ? y.right : y.left;
    const OpenAtom& v = x.swap ? y.left : y.right;
    open_compose_atoms(x.left, u, [&](const OpenAtom& l, long kl) {
      open_compose_atoms(x.right, v, [&](const OpenAtom& r, long kr) {
        emit(OpenTAtom{l, r, x.swap != y.swap}, kl * kr);
      });
    });
  });
}

std::string render(const OpenTCorr& x) {
  return x.render([](const OpenTAtom& a) { return a.to_string(); });
}

Certificate restriction_certificate(int level) {
  require_level(level);
  Certificate cert;
  cert.subject = "restriction";
  cert.level = level;
  auto expect = [&](const std::string& name, const char* lemma, const OpenCorr& lhs, const OpenCorr& rhs) {
    cert.add(name, lemma, render(lhs), render(rhs), lhs == rhs);
  };

  const char* kTarget = "restriction of the projectors to the smooth part";
  SurfaceProjectors P = build_pi_bars(level);
  OpenCorr zero(level);
  OpenCorr t0 = OpenCorr::of(level, OpenAtom::tgraph(AffEnd::multiplication(level, 0)));
  OpenCorr g0 = OpenCorr::of(level, OpenAtom::graph(AffEnd::multiplication(level, 0)));
  OpenCorr eps(level);
  const QG eps_group = epsilon_projector(level);
  for (const auto& [g, c] : eps_group.terms())
    eps.add(OpenAtom::graph(AffEnd::make(level, g.s, g.b1, g.b2)), c);
  std::array<OpenCorr, 3> R{restrict_to_open(P.pi[0]), restrict_to_open(P.pi[1]), restrict_to_open(P.pi[2])};
  expect("psi(pi0) = t(A(0,0,0))", kTarget, R[0], t0);
  expect("psi(pi1) = epsilon sum", kTarget, R[1], eps);
  expect("psi(pi2) = A(0,0,0)", kTarget, R[2], g0);
  expect("psi(V) = 0", kTarget, restrict_to_open(vertical(level)), zero);
  const long cusps = cusp_count(level);
  for (long c = 0; c < cusps; ++c)
    expect("psi(piC(" + std::to_string(c) + ")) = 0", kTarget, restrict_to_open(build_pi_cusp(level, static_cast<int>(c))),
           zero);

  const char* kOrth = "restricted projectors are orthogonal idempotents";
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      expect("psi(pi" + std::to_string(i) + ") . psi(pi" + std::to_string(j) + ")", kOrth, open_compose(R[i], R[j]),
             i == j ? R[i] : zero);
  cert.record("psi(piF) = Delta", "restriction of the sum of the projectors",
              "the restricted projectors are the canonical relative projectors, whose sum is the diagonal "
              "(characterizing property, taken as an axiom)");

  const char* kMult = "psi is multiplicative on graph compositions";
  std::vector<SurfAtom> atoms;
  for (const SurfAtom& a : surface_atom_universe(level))
    if (a.kind != SurfKind::CuspProd) atoms.push_back(a);
  std::size_t bad = 0, total = 0;
  std::string first_bad;
  for (const SurfAtom& x : atoms)
    for (const SurfAtom& y : atoms) {
      SurfCorr sx = surf_atom(level, x), sy = surf_atom(level, y);
      OpenCorr lhs = restrict_to_open(compose(sx, sy));
      OpenCorr rhs = open_compose(restrict_to_open(sx), restrict_to_open(sy));
      ++total;
      if (!(lhs == rhs)) {
        if (bad++ == 0) first_bad = x.to_string() + " o " + y.to_string();
      }
    }
  cert.add("psi(x . y) = psi(x) . psi(y) on " + std::to_string(total) + " atom pairs", kMult,
           std::to_string(total - bad) + " agree", bad == 0 ? std::to_string(total) + " agree" : "first failure " + first_bad,
           bad == 0);
  return cert;
}

}  // namespace motive
