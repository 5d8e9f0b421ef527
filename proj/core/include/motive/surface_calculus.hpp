#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "motive/certificate.hpp"
#include "motive/endo_monoid.hpp"
#include "motive/exact_math.hpp"
#include "motive/formal_sum.hpp"
#include "motive/symmetry_algebra.hpp"

namespace motive {

// Largest level the packed atom encodings support.
inline constexpr int kMaxAtomLevel = 255;

enum class SurfKind : std::uint8_t { Graph = 0, TGraph = 1, Vert = 2, CuspProd = 3 };

// Atom of the correspondence algebra of the surface over the modular curve.
// Collapses are stored by their target section only (the sign part of a
// collapse does not change the map), and transposed automorphism graphs are
// normalized to graphs of the inverse.
struct SurfAtom {
  SurfKind kind = SurfKind::Graph;
  bool collapse = false;
  std::int8_t s = 1;
  std::uint8_t b1 = 0;
  std::uint8_t b2 = 0;
  std::uint16_t cusp = 0;
  std::uint8_t m = 0;
  std::uint8_t n = 0;

  static SurfAtom graph(const SurfEnd& f);
  static SurfAtom tgraph(const SurfEnd& f);
  static SurfAtom vert() { return {SurfKind::Vert}; }
  static SurfAtom cusp_prod(int cusp, int m, int n);

  bool is_automorphism_graph() const { return kind == SurfKind::Graph && !collapse; }
  bool is_collapse_graph() const { return kind == SurfKind::Graph && collapse; }
  // The endomorphism behind a Graph or TGraph atom.
  SurfEnd endo(int level) const;

  std::uint64_t hash() const;
  std::string to_string() const;
  friend auto operator<=>(const SurfAtom&, const SurfAtom&) = default;
};

using SurfCorr = FormalSum<SurfAtom>;

SurfCorr surf_identity(int level);
SurfCorr surf_atom(int level, const SurfAtom& a, Rational c = 1);
// Image of a group-ring element under g -> Graph(g).
SurfCorr image_of(const QG& x);

// Emits the atom-level product after o before; see the rule table in the source.
template <class Emit>
void compose_atoms(int level, const SurfAtom& after, const SurfAtom& before, Emit&& emit);

SurfCorr compose(const SurfCorr& after, const SurfCorr& before);
SurfCorr transpose(const SurfCorr& x);
SurfAtom transpose_atom(int level, const SurfAtom& a);

std::string render(const SurfCorr& x);

// Cyclic intersection matrix of an N-gon: -2 on the diagonal, 1 for neighbours.
inline long neron_entry(int level, int m, int mp) {
  if (m == mp) return -2;
  int d = mod(m - mp, level);
  return (d == 1 || d == level - 1) ? 1 : 0;
}

struct NeronLattice {
  int level = 3;
  RatMatrix full_matrix;
  std::size_t rank = 0;
  RatMatrix reduced_block;    // rows/cols 1..N-1
  RatMatrix reduced_inverse;  // s(m, n) for m, n != 0
};

NeronLattice neron_lattice(int level);

struct SurfaceProjectors {
  std::array<SurfCorr, 3> pi;  // relative degrees 0, 1, 2
};

// pi[0] = TGraph(mu0) - V/2, pi[2] = Graph(mu0) - V/2, pi[1] = epsilon image.
SurfaceProjectors build_pi_bars(int level);
SurfCorr build_pi_cusp(int level, int cusp);
// Delta - pi[0] - pi[1] - pi[2].
SurfCorr residual_projector(int level);

// Generators: graph and transposed graph of the zero-section collapse.
SurfCorr p_bar_two(int level);   // Graph(mu0)
SurfCorr p_bar_zero(int level);  // TGraph(mu0)
SurfCorr vertical(int level);

// --- Divisor classes in NS of the surface --------------------------------

enum class DivKind : std::uint8_t { Fiber = 0, Section = 1, Theta = 2 };

struct DivBasis {
  DivKind kind = DivKind::Fiber;
  std::uint8_t b1 = 0;
  std::uint8_t b2 = 0;
  std::uint16_t cusp = 0;
  std::uint8_t m = 0;

  static DivBasis fiber() { return {DivKind::Fiber}; }
  static DivBasis section(int b1, int b2) { return {DivKind::Section, static_cast<std::uint8_t>(b1), static_cast<std::uint8_t>(b2)}; }
  static DivBasis theta(int cusp, int m) { return {DivKind::Theta, 0, 0, static_cast<std::uint16_t>(cusp), static_cast<std::uint8_t>(m)}; }

  std::string to_string() const;
  friend auto operator<=>(const DivBasis&, const DivBasis&) = default;
};

class DivClass {
 public:
  explicit DivClass(int level = 3) : level_(level) {}
  static DivClass of(int level, const DivBasis& b, LinearCoeff c = Rational(1));

  int level() const { return level_; }
  const std::map<DivBasis, LinearCoeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const DivBasis& b, const LinearCoeff& c);
  DivClass& operator+=(const DivClass& o);
  friend bool operator==(const DivClass&, const DivClass&) = default;
  std::string to_string() const;

 private:
  int level_;
  std::map<DivBasis, LinearCoeff> terms_;
};

// Sum over the components of the fiber at a cusp.
DivClass cusp_fiber(int level, int cusp);
std::vector<DivBasis> divisor_basis(int level);

DivClass act_on_divisor(const SurfCorr& x, const DivClass& z);
DivClass act_atom_on_basis(int level, const SurfAtom& a, const DivBasis& z);

// All atoms reachable from the generating set at this level.
std::vector<SurfAtom> surface_atom_universe(int level);

Certificate surface_certificate(int level);

// ---------------------------------------------------------------------------

template <class Emit>
void compose_atoms(int level, const SurfAtom& x, const SurfAtom& y, Emit&& emit) {
  using K = SurfKind;
  // Graph composition follows the pushforward/pullback formulas
  //   Gamma_g o alpha = (id x g)_* alpha,  beta o Gamma_f = (f x id)^* beta,
  // and products compose as (Z x W) o (X x Y) = (Y . Z)(X x W).
  switch (x.kind) {
    case K::Graph:
      switch (y.kind) {
        case K::Graph:
          emit(SurfAtom::graph(surf_compose(x.endo(level), y.endo(level))), 1);
          return;
        case K::TGraph:
          // Automorphism: the collapse absorbs it. Collapse: dimension drop.
          if (!x.collapse) emit(y, 1);
          return;
        case K::Vert:
          if (!x.collapse) emit(y, 1);
          return;
        case K::CuspProd:
          if (!x.collapse) {
            GElem g = x.endo(level).g;
            emit(SurfAtom::cusp_prod(y.cusp, y.m, g.act_on_index(y.n)), 1);
          }
          return;
      }
      break;
    case K::TGraph:
      switch (y.kind) {
        case K::Graph:
          if (!y.collapse) {
            // f^{-1} o c: collapse onto the section moved by f^{-1}.
            emit(SurfAtom::tgraph(surf_compose(SurfEnd::automorphism(y.endo(level).g.inverse()), x.endo(level))), 1);
          } else if (x.b1 == y.b1 && x.b2 == y.b2) {
            emit(SurfAtom::vert(), 1);
          }
          return;
        case K::TGraph:
          emit(y, 1);  // c1 o c2 = c1
          return;
        case K::Vert:
          emit(y, 1);
          return;
        case K::CuspProd:
          // Pullback of theta_c(n) along a collapse is the whole fiber when
          // the section passes through that component.
          if (y.n == x.b1)
            for (int k = 0; k < level; ++k) emit(SurfAtom::cusp_prod(y.cusp, y.m, k), 1);
          return;
      }
      break;
    case K::Vert:
      if (y.kind == K::Graph) emit(x, 1);
      return;
    case K::CuspProd:
      switch (y.kind) {
        case K::Graph:
          if (!y.collapse) {
            GElem ginv = y.endo(level).g.inverse();
            emit(SurfAtom::cusp_prod(x.cusp, ginv.act_on_index(x.m), x.n), 1);
          } else if (x.m == y.b1) {
            for (int k = 0; k < level; ++k) emit(SurfAtom::cusp_prod(x.cusp, k, x.n), 1);
          }
          return;
        case K::CuspProd:
          if (x.cusp == y.cusp) {
            long a = neron_entry(level, y.n, x.m);
            if (a != 0) emit(SurfAtom::cusp_prod(x.cusp, y.m, x.n), a);
          }
          return;
        case K::TGraph:
        case K::Vert:
          return;
      }
      break;
  }
  throw UnsupportedComposition("no rule for " + x.to_string() + " o " + y.to_string());
}

}  // namespace motive
