#pragma once

#include <cstdint>
#include <string>

#include "motive/certificate.hpp"
#include "motive/endo_monoid.hpp"
#include "motive/formal_sum.hpp"
#include "motive/surface_calculus.hpp"

namespace motive {

// Graph or transposed graph of an affine map of the smooth part E over M.
// Transposed graphs of invertible maps are stored as graphs of the inverse.
struct OpenAtom {
  bool transposed = false;
  AffEnd f;

  static OpenAtom graph(const AffEnd& f) { return {false, f}; }
  static OpenAtom tgraph(const AffEnd& f);

  std::uint64_t hash() const;
  std::string to_string() const;
  friend auto operator<=>(const OpenAtom&, const OpenAtom&) = default;
};

using OpenCorr = FormalSum<OpenAtom>;

// Only same-species products and the collapse/automorphism mixes the surface
// calculus needs are modeled; anything else throws UnsupportedComposition.
template <class Emit>
void open_compose_atoms(const OpenAtom& x, const OpenAtom& y, Emit&& emit);

OpenCorr open_compose(const OpenCorr& after, const OpenCorr& before);
OpenCorr open_identity(int level);
std::string render(const OpenCorr& x);

// psi#: restriction to the smooth part. Vertical and cusp-supported atoms die.
OpenCorr restrict_to_open(const SurfCorr& x);
OpenAtom restrict_endo(const SurfEnd& f);

// Tensor model on E x_M E.
struct OpenTAtom {
  OpenAtom left;
  OpenAtom right;
  bool swap = false;

  std::uint64_t hash() const;
  std::string to_string() const;
  friend auto operator<=>(const OpenTAtom&, const OpenTAtom&) = default;
};

using OpenTCorr = FormalSum<OpenTAtom>;

OpenTCorr open_tensor(const OpenCorr& a, const OpenCorr& b);
OpenTCorr open_t_compose(const OpenTCorr& after, const OpenTCorr& before);
std::string render(const OpenTCorr& x);

// Surface restriction identities: targets of psi# and multiplicativity.
Certificate restriction_certificate(int level);

// ---------------------------------------------------------------------------

template <class Emit>
void open_compose_atoms(const OpenAtom& x, const OpenAtom& y, Emit&& emit) {
  const bool xi = x.f.is_invertible(), yi = y.f.is_invertible();
  if (!x.transposed && !y.transposed) {
    emit(OpenAtom::graph(aff_compose(x.f, y.f)), 1);
    return;
  }
  if (x.transposed && y.transposed) {
    emit(OpenAtom::tgraph(aff_compose(y.f, x.f)), 1);
    return;
  }
  if (!x.transposed && xi) {
    // G(f) o T(h) = T(h o f^-1).
    emit(OpenAtom::tgraph(aff_compose(y.f, x.f.inverse())), 1);
    return;
  }
  if (!y.transposed && yi) {
    // T(h) o G(f) = T(f^-1 o h).
    emit(OpenAtom::tgraph(aff_compose(y.f.inverse(), x.f)), 1);
    return;
  }
  // Zero maps against each other: the dimension drops for G o T, and T o G is
  // the restriction of the vertical class, which vanishes on the open part.
  if (x.f.n == 0 && y.f.n == 0) return;
  throw UnsupportedComposition("open part: no rule for " + x.to_string() + " o " + y.to_string());
}

}  // namespace motive
