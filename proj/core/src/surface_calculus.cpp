#include "motive/surface_calculus.hpp"

#include <stdexcept>

#include "motive/level_arithmetic.hpp"
#include "motive/open_part.hpp"

namespace motive {

namespace {

void check_atom_level(int level) {
  if (level > kMaxAtomLevel) throw std::out_of_range("level exceeds the atom encoding limit");
}

}  // namespace

SurfAtom SurfAtom::graph(const SurfEnd& f) {
  check_atom_level(f.level());
  SurfAtom a;
  a.kind = SurfKind::Graph;
  a.collapse = f.collapse;
  a.s = static_cast<std::int8_t>(f.collapse ? 1 : f.g.s);
  a.b1 = static_cast<std::uint8_t>(f.g.b1);
  a.b2 = static_cast<std::uint8_t>(f.g.b2);
  return a;
}

SurfAtom SurfAtom::tgraph(const SurfEnd& f) {
  if (!f.collapse) return graph(SurfEnd::automorphism(f.g.inverse()));
  SurfAtom a = graph(f);
  a.kind = SurfKind::TGraph;
  return a;
}

SurfAtom SurfAtom::cusp_prod(int cusp, int m, int n) {
  SurfAtom a;
  a.kind = SurfKind::CuspProd;
  a.cusp = static_cast<std::uint16_t>(cusp);
  a.m = static_cast<std::uint8_t>(m);
  a.n = static_cast<std::uint8_t>(n);
  return a;
}

SurfEnd SurfAtom::endo(int level) const {
  if (kind != SurfKind::Graph && kind != SurfKind::TGraph) throw std::logic_error("atom has no endomorphism");
  return {GElem{level, b1, b2, s}, collapse};
}

std::uint64_t SurfAtom::hash() const {
  return static_cast<std::uint64_t>(kind) | (static_cast<std::uint64_t>(collapse) << 2) |
         (static_cast<std::uint64_t>(s == 1) << 3) | (static_cast<std::uint64_t>(b1) << 4) |
         (static_cast<std::uint64_t>(b2) << 12) | (static_cast<std::uint64_t>(cusp) << 20) |
         (static_cast<std::uint64_t>(m) << 36) | (static_cast<std::uint64_t>(n) << 44);
}

std::string SurfAtom::to_string() const {
  auto i = [](int v) { return std::to_string(v); };
  switch (kind) {
    case SurfKind::Graph:
      if (collapse) return "Gc(" + i(b1) + "," + i(b2) + ")";
      return "G(" + i(b1) + "," + i(b2) + "," + i(s) + ")";
    case SurfKind::TGraph:
      return "t(Gc(" + i(b1) + "," + i(b2) + "))";
    case SurfKind::Vert:
      return "V";
    case SurfKind::CuspProd:
      return "CP(" + i(cusp) + "," + i(m) + "," + i(n) + ")";
  }
  return "?";
}

SurfCorr surf_atom(int level, const SurfAtom& a, Rational c) { return SurfCorr::of(level, a, std::move(c)); }

SurfCorr surf_identity(int level) { return surf_atom(level, SurfAtom::graph(SurfEnd::identity(level))); }

SurfCorr image_of(const QG& x) {
  SurfCorr r(x.level());
  for (const auto& [g, c] : x.terms()) r.add(SurfAtom::graph(SurfEnd::automorphism(g)), c);
  return r;
}

SurfCorr compose(const SurfCorr& after, const SurfCorr& before) {
  const int level = after.level();
  return compose_bilinear(after, before, [level](const SurfAtom& x, const SurfAtom& y, auto&& emit) {
    compose_atoms(level, x, y, emit);
  });
}

SurfAtom transpose_atom(int level, const SurfAtom& a) {
  switch (a.kind) {
    case SurfKind::Graph:
      if (a.collapse) {
        SurfAtom t = a;
        t.kind = SurfKind::TGraph;
        return t;
      }
      return SurfAtom::graph(SurfEnd::automorphism(a.endo(level).g.inverse()));
    case SurfKind::TGraph: {
      SurfAtom t = a;
      t.kind = SurfKind::Graph;
      return t;
    }
    case SurfKind::Vert:
      return a;
    case SurfKind::CuspProd:
      return SurfAtom::cusp_prod(a.cusp, a.n, a.m);
  }
  return a;
}

SurfCorr transpose(const SurfCorr& x) {
  SurfCorr r(x.level());
  for (const auto& [a, c] : x) r.add(transpose_atom(x.level(), a), c);
  return r;
}

std::string render(const SurfCorr& x) {
  return x.render([](const SurfAtom& a) { return a.to_string(); });
}

NeronLattice neron_lattice(int level) {
  require_level(level);
  NeronLattice L;
  L.level = level;
  L.full_matrix = RatMatrix(level, level);
  for (int m = 0; m < level; ++m)
    for (int k = 0; k < level; ++k) L.full_matrix.at(m, k) = neron_entry(level, m, k);
  L.rank = mat_rank(L.full_matrix);
  L.reduced_block = RatMatrix(level - 1, level - 1);
  for (int m = 1; m < level; ++m)
    for (int k = 1; k < level; ++k) L.reduced_block.at(m - 1, k - 1) = L.full_matrix.at(m, k);
  L.reduced_inverse = mat_inverse(L.reduced_block);
  return L;
}

SurfCorr p_bar_two(int level) { return surf_atom(level, SurfAtom::graph(SurfEnd::collapse_to(level, 0, 0))); }
SurfCorr p_bar_zero(int level) { return surf_atom(level, SurfAtom::tgraph(SurfEnd::collapse_to(level, 0, 0))); }
SurfCorr vertical(int level) { return surf_atom(level, SurfAtom::vert()); }

SurfaceProjectors build_pi_bars(int level) {
  require_level(level);
  SurfCorr half_v = Rational(1, 2) * vertical(level);
  SurfaceProjectors p;
  p.pi[0] = p_bar_zero(level) - half_v;
  p.pi[1] = image_of(epsilon_projector(level));
  p.pi[2] = p_bar_two(level) - half_v;
  return p;
}

SurfCorr build_pi_cusp(int level, int cusp) {
  require_level(level);
  if (cusp < 0 || cusp >= cusp_count(level)) throw std::out_of_range("cusp index out of range");
  NeronLattice L = neron_lattice(level);
  SurfCorr r(level);
  for (int m = 1; m < level; ++m)
    for (int n = 1; n < level; ++n) r.add(SurfAtom::cusp_prod(cusp, m, n), L.reduced_inverse.at(m - 1, n - 1));
  return r;
}

SurfCorr residual_projector(int level) {
  SurfaceProjectors p = build_pi_bars(level);
  return surf_identity(level) - p.pi[0] - p.pi[1] - p.pi[2];
}

// --- divisors ---------------------------------------------------------------

std::string DivBasis::to_string() const {
  auto i = [](int v) { return std::to_string(v); };
  switch (kind) {
    case DivKind::Fiber: return "F";
    case DivKind::Section: return "Sec(" + i(b1) + "," + i(b2) + ")";
    case DivKind::Theta: return "Theta(" + i(cusp) + "," + i(m) + ")";
  }
  return "?";
}

DivClass DivClass::of(int level, const DivBasis& b, LinearCoeff c) {
  DivClass d(level);
  d.add(b, c);
  return d;
}

void DivClass::add(const DivBasis& b, const LinearCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DivClass& DivClass::operator+=(const DivClass& o) {
  require_same_level(level_, o.level_);
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

std::string DivClass::to_string() const {
  std::vector<std::pair<std::string, std::string>> parts;
  for (const auto& [b, c] : terms_) {
    std::string coeff = c.to_string();
    if (!c.d_a_part().is_zero() && !c.constant().is_zero()) coeff = "(" + coeff + ")";
    parts.emplace_back(coeff, b.to_string());
  }
  return render_terms(parts);
}

DivClass cusp_fiber(int level, int cusp) {
  DivClass d(level);
  for (int m = 0; m < level; ++m) d.add(DivBasis::theta(cusp, m), Rational(1));
  return d;
}

std::vector<DivBasis> divisor_basis(int level) {
  std::vector<DivBasis> out{DivBasis::fiber()};
  for (int b1 = 0; b1 < level; ++b1)
    for (int b2 = 0; b2 < level; ++b2) out.push_back(DivBasis::section(b1, b2));
  long c = cusp_count(level);
  for (int k = 0; k < c; ++k)
    for (int m = 0; m < level; ++m) out.push_back(DivBasis::theta(k, m));
  return out;
}

namespace {

// (z . F): sections meet a fiber once; fiber components and fibers do not.
Rational pair_with_fiber(const DivBasis& z) { return z.kind == DivKind::Section ? Rational(1) : Rational(0); }

// (z . theta_c(m)).
Rational pair_with_theta(int level, const DivBasis& z, int cusp, int m) {
  switch (z.kind) {
    case DivKind::Fiber: return 0;
    case DivKind::Section: return z.b1 == m ? 1 : 0;
    case DivKind::Theta: return z.cusp == cusp ? Rational(neron_entry(level, z.m, m)) : Rational(0);
  }
  return 0;
}

}  // namespace

DivClass act_atom_on_basis(int level, const SurfAtom& a, const DivBasis& z) {
  DivClass out(level);
  switch (a.kind) {
    case SurfKind::Graph: {
      // Pushforward.
      SurfEnd f = a.endo(level);
      if (f.collapse) {
        if (z.kind == DivKind::Section) out.add(DivBasis::section(a.b1, a.b2), Rational(1));
        return out;
      }
      switch (z.kind) {
        case DivKind::Fiber: out.add(z, Rational(1)); break;
        case DivKind::Section: {
          auto [p1, p2] = f.g.act_on_point(z.b1, z.b2);
          out.add(DivBasis::section(p1, p2), Rational(1));
          break;
        }
        case DivKind::Theta: out.add(DivBasis::theta(z.cusp, f.g.act_on_index(z.m)), Rational(1)); break;
      }
      return out;
    }
    case SurfKind::TGraph:
      // Pullback along x -> e_b(phi(x)) is phi^* of the restriction to e_b.
      switch (z.kind) {
        case DivKind::Fiber: out.add(z, Rational(1)); break;
        case DivKind::Section:
          if (z.b1 == a.b1 && z.b2 == a.b2) out.add(DivBasis::fiber(), LinearCoeff::d_a());
          break;
        case DivKind::Theta:
          if (z.m == a.b1) out += cusp_fiber(level, z.cusp);
          break;
      }
      return out;
    case SurfKind::Vert: {
      Rational k = pair_with_fiber(z);
      if (!k.is_zero()) out.add(DivBasis::fiber(), LinearCoeff(0, k));
      return out;
    }
    case SurfKind::CuspProd: {
      Rational k = pair_with_theta(level, z, a.cusp, a.m);
      if (!k.is_zero()) out.add(DivBasis::theta(a.cusp, a.n), k);
      return out;
    }
  }
  throw UnsupportedAction("no action for " + a.to_string());
}

DivClass act_on_divisor(const SurfCorr& x, const DivClass& z) {
  require_same_level(x.level(), z.level());
  DivClass out(x.level());
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : z.terms()) {
      DivClass img = act_atom_on_basis(x.level(), a, b);
      for (const auto& [t, ct] : img.terms()) out.add(t, LinearCoeff(ca) * cb * ct);
    }
  return out;
}

std::vector<SurfAtom> surface_atom_universe(int level) {
  std::vector<SurfAtom> out;
  for (const auto& g : enumerate_group(level)) out.push_back(SurfAtom::graph(SurfEnd::automorphism(g)));
  for (int b1 = 0; b1 < level; ++b1)
    for (int b2 = 0; b2 < level; ++b2) {
      out.push_back(SurfAtom::graph(SurfEnd::collapse_to(level, b1, b2)));
      out.push_back(SurfAtom::tgraph(SurfEnd::collapse_to(level, b1, b2)));
    }
  out.push_back(SurfAtom::vert());
  long c = cusp_count(level);
  for (int k = 0; k < c; ++k)
    for (int m = 0; m < level; ++m)
      for (int n = 0; n < level; ++n) out.push_back(SurfAtom::cusp_prod(k, m, n));
  return out;
}

// --- certificate ------------------------------------------------------------

namespace {

void expect(Certificate& cert, const std::string& name, const char* lemma, const SurfCorr& lhs, const SurfCorr& rhs) {
  cert.add(name, lemma, render(lhs), render(rhs), lhs == rhs);
}

void expect_div(Certificate& cert, const std::string& name, const char* lemma, const DivClass& lhs,
                const DivClass& rhs) {
  cert.add(name, lemma, lhs.to_string(), rhs.to_string(), lhs == rhs);
}

}  // namespace

Certificate surface_certificate(int level) {
  require_level(level);
  Certificate cert;
  cert.subject = "surface";
  cert.level = level;
  const long cusps = cusp_count(level);
  const SurfCorr zero(level);

  const char* kGen = "generator relations of the zero-section graphs";
  SurfCorr p0 = p_bar_zero(level), p2 = p_bar_two(level), V = vertical(level);
  expect(cert, "p0 . p0 = p0", kGen, compose(p0, p0), p0);
  expect(cert, "p2 . p2 = p2", kGen, compose(p2, p2), p2);
  expect(cert, "p2 . p0 = 0", kGen, compose(p2, p0), zero);
  expect(cert, "p0 . p2 = V", kGen, compose(p0, p2), V);
  expect(cert, "V . V = 0", kGen, compose(V, V), zero);

  SurfaceProjectors P = build_pi_bars(level);
  std::vector<std::pair<std::string, SurfCorr>> family;
  for (int i = 0; i < 3; ++i) family.emplace_back("pi" + std::to_string(i), P.pi[i]);
  for (int c = 0; c < cusps; ++c) family.emplace_back("piC(" + std::to_string(c) + ")", build_pi_cusp(level, c));

  const char* kOrth = "mutually orthogonal projectors";
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      const auto& [ni, pi] = family[i];
      const auto& [nj, pj] = family[j];
      SurfCorr prod = compose(pi, pj);
      if (i == j) {
        expect(cert, ni + " . " + ni + " = " + ni, kOrth, prod, pi);
      } else {
        expect(cert, ni + " . " + nj + " = 0", kOrth, prod, zero);
      }
    }

  const char* kRes = "residual projector";
  SurfCorr res = residual_projector(level);
  expect(cert, "piInf . piInf = piInf", kRes, compose(res, res), res);
  for (int i = 0; i < 3; ++i) {
    expect(cert, "piInf . pi" + std::to_string(i) + " = 0", kRes, compose(res, P.pi[i]), zero);
    expect(cert, "pi" + std::to_string(i) + " . piInf = 0", kRes, compose(P.pi[i], res), zero);
  }
  for (std::size_t k = 3; k < family.size(); ++k) {
    const auto& [nc, pc] = family[k];
    expect(cert, "piInf . " + nc + " = " + nc, kRes, compose(res, pc), pc);
    expect(cert, nc + " . piInf = " + nc, kRes, compose(pc, res), pc);
  }
  cert.record("piInf = sum of piC(c)", "structure of the residual projector",
              "the residual projector equals the sum of the cusp projectors (proved with exact sequences of "
              "Chow groups; not re-derived by the engine)");

  const char* kT = "transpose symmetry";
  expect(cert, "t(pi0) = pi2", kT, transpose(P.pi[0]), P.pi[2]);
  expect(cert, "t(pi1) = pi1", kT, transpose(P.pi[1]), P.pi[1]);
  expect(cert, "t(piInf) = piInf", kT, transpose(res), res);
  for (std::size_t k = 3; k < family.size(); ++k)
    expect(cert, "t(" + family[k].first + ") = " + family[k].first, kT, transpose(family[k].second),
           family[k].second);

  const char* kEps = "epsilon projector factorization";
  LambdaTheta lt = lambda_theta(level);
  SurfCorr lam = image_of(lt.lambda), th = image_of(lt.theta);
  expect(cert, "pi1 = lambda . theta", kEps, compose(lam, th), P.pi[1]);
  expect(cert, "pi1 = theta . lambda", kEps, compose(th, lam), P.pi[1]);

  const char* kLift = "nilpotent lift witnesses";
  struct Pair {
    std::string p, q;
    SurfCorr a, b;
  };
  for (const Pair& w : {Pair{"p0", "pi0", p0, P.pi[0]}, Pair{"p2", "pi2", p2, P.pi[2]}}) {
    expect(cert, w.p + " . " + w.q + " . " + w.p + " = " + w.p, kLift, compose(compose(w.a, w.b), w.a), w.a);
    expect(cert, w.q + " . " + w.p + " . " + w.q + " = " + w.q, kLift, compose(compose(w.b, w.a), w.b), w.b);
    SurfCorr diff = w.a - w.b;
    expect(cert, "(" + w.p + " - " + w.q + ")^2 = 0", kLift, compose(diff, diff), zero);
  }

  const char* kAct = "divisor action of the projectors";
  DivClass F = DivClass::of(level, DivBasis::fiber());
  DivClass none(level);
  expect_div(cert, "pi0(F) = F", kAct, act_on_divisor(P.pi[0], F), F);
  expect_div(cert, "pi1(F) = 0", kAct, act_on_divisor(P.pi[1], F), none);
  expect_div(cert, "pi2(F) = 0", kAct, act_on_divisor(P.pi[2], F), none);
  for (int c = 0; c < cusps; ++c) {
    for (int m = 0; m < level; ++m) {
      DivClass th_m = DivClass::of(level, DivBasis::theta(c, m));
      std::string tag = "Theta(" + std::to_string(c) + "," + std::to_string(m) + ")";
      expect_div(cert, "pi0(" + tag + ")", kAct, act_on_divisor(P.pi[0], th_m), m == 0 ? cusp_fiber(level, c) : none);
      expect_div(cert, "pi1(" + tag + ") = 0", kAct, act_on_divisor(P.pi[1], th_m), none);
      expect_div(cert, "pi2(" + tag + ") = 0", kAct, act_on_divisor(P.pi[2], th_m), none);
      // Theta(c, 0) = [E_c] - (the others), and piC kills the full fibre.
      DivClass minus_rest(level);
      for (int k = 1; k < level; ++k) minus_rest.add(DivBasis::theta(c, k), Rational(-1));
      expect_div(cert, "piC(" + std::to_string(c) + ")(" + tag + ")", kAct,
                 act_on_divisor(family[3 + c].second, th_m), m == 0 ? minus_rest : th_m);
      DivClass avg(level);
      for (int k = 0; k < level; ++k) avg.add(DivBasis::theta(c, k), Rational(1, level));
      expect_div(cert, "theta(" + tag + ") = fiber/N", kAct, act_on_divisor(th, th_m), avg);
    }
  }

  cert.append(restriction_certificate(level));
  cert.append(verify_structure_identities(level));
  return cert;
}

}  // namespace motive
