#pragma once

#include <compare>
#include <string>
#include <utility>

#include "motive/certificate.hpp"
#include "motive/symmetry_algebra.hpp"

namespace motive {

// Fiberwise endomorphism of the surface: x -> g x, or, when collapse is set,
// x -> g applied to the zero-section point over the image of x.
struct SurfEnd {
  GElem g;
  bool collapse = false;

  static SurfEnd identity(int level) { return {GElem::identity(level), false}; }
  static SurfEnd automorphism(const GElem& g) { return {g, false}; }
  // Collapse onto the torsion section b.
  static SurfEnd collapse_to(int level, long b1, long b2) { return {GElem::translation(level, b1, b2), true}; }

  int level() const { return g.level; }
  bool is_automorphism() const { return !collapse; }
  // Section targeted by a collapse (translation part of g).
  std::pair<int, int> section() const { return {g.b1, g.b2}; }
  std::pair<int, int> act_on_point(int p1, int p2) const {
    return collapse ? section() : g.act_on_point(p1, p2);
  }

  std::string to_string() const;
  friend auto operator<=>(const SurfEnd&, const SurfEnd&) = default;
};

SurfEnd surf_compose(const SurfEnd& f, const SurfEnd& h);

// (left (x) right) sigma^swap; the swap acts first.
struct TensorEnd {
  SurfEnd left;
  SurfEnd right;
  bool swap = false;

  static TensorEnd identity(int level) { return {SurfEnd::identity(level), SurfEnd::identity(level), false}; }
  static TensorEnd sigma(int level) { return {SurfEnd::identity(level), SurfEnd::identity(level), true}; }
  int level() const { return left.level(); }

  std::string to_string() const;
  friend auto operator<=>(const TensorEnd&, const TensorEnd&) = default;
};

TensorEnd tensor_compose(const TensorEnd& f, const TensorEnd& h);
// sigma o f o sigma.
TensorEnd swap_conjugate(const TensorEnd& f);

// x -> n x + b on the smooth part; b is an N-torsion point.
struct AffEnd {
  int level = 3;
  long n = 1;
  int b1 = 0;
  int b2 = 0;

  static AffEnd identity(int level) { return {level, 1, 0, 0}; }
  static AffEnd multiplication(int level, long n) { return {level, n, 0, 0}; }
  static AffEnd translation(int level, long b1, long b2) { return {level, 1, mod(b1, level), mod(b2, level)}; }
  static AffEnd make(int level, long n, long b1, long b2) { return {level, n, mod(b1, level), mod(b2, level)}; }

  bool is_invertible() const { return n == 1 || n == -1; }
  AffEnd inverse() const;  // only for n = +-1

  std::string to_string() const;
  friend auto operator<=>(const AffEnd&, const AffEnd&) = default;
};

AffEnd aff_compose(const AffEnd& f, const AffEnd& h);

// Evaluates the section/projection identities for the surface and the
// threefold in a two-object composition system (total space, base).
Certificate verify_structure_identities(int level);

}  // namespace motive
