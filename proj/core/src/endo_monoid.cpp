#include "motive/endo_monoid.hpp"

#include <optional>
#include <stdexcept>
#include <variant>

namespace motive {

std::string SurfEnd::to_string() const {
  if (!collapse) return "aut" + g.to_string();
  return "collapse(" + std::to_string(g.b1) + "," + std::to_string(g.b2) + "," + (g.s == 1 ? "+" : "-") + ")";
}

SurfEnd surf_compose(const SurfEnd& f, const SurfEnd& h) {
  require_same_level(f.level(), h.level());
  if (f.collapse) return f;
  return {g_mul(f.g, h.g), h.collapse};
}

std::string TensorEnd::to_string() const {
  return left.to_string() + "(x)" + right.to_string() + (swap ? ".sigma" : "");
}

TensorEnd tensor_compose(const TensorEnd& f, const TensorEnd& h) {
  require_same_level(f.level(), h.level());
  const SurfEnd& x = f.swap ? h.right : h.left;
  const SurfEnd& y = f.swap ? h.left : h.right;
  return {surf_compose(f.left, x), surf_compose(f.right, y), f.swap != h.swap};
}

TensorEnd swap_conjugate(const TensorEnd& f) { return {f.right, f.left, f.swap}; }

AffEnd AffEnd::inverse() const {
  if (!is_invertible()) throw std::domain_error("affine map " + to_string() + " is not invertible");
  // x = n^{-1}(y - b) with n = n^{-1}.
  return make(level, n, -n * b1, -n * b2);
}

std::string AffEnd::to_string() const {
  return "(" + std::to_string(n) + ";" + std::to_string(b1) + "," + std::to_string(b2) + ")";
}

AffEnd aff_compose(const AffEnd& f, const AffEnd& h) {
  require_same_level(f.level, h.level);
  return AffEnd::make(f.level, f.n * h.n, f.n * h.b1 + f.b1, f.n * h.b2 + f.b2);
}

namespace {

// Morphisms of the two-object system. Points of the total space over the
// base are labelled by torsion sections; the threefold uses pairs of them.
template <class End>
struct Arrow {
  enum class Kind { Endo, Projection, Section, BaseIdentity } kind;
  std::optional<End> endo;
  std::pair<int, int> sec1{0, 0};
  std::pair<int, int> sec2{0, 0};

  bool source_is_total() const { return kind == Kind::Endo || kind == Kind::Projection; }
  bool target_is_total() const { return kind == Kind::Endo || kind == Kind::Section; }
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

using SArrow = Arrow<SurfEnd>;
using TArrow = Arrow<TensorEnd>;

SurfEnd collapse_onto(int level, std::pair<int, int> s, std::pair<int, int>) {
  return SurfEnd::collapse_to(level, s.first, s.second);
}

TensorEnd collapse_onto_pair(int level, std::pair<int, int> s1, std::pair<int, int> s2) {
  return {SurfEnd::collapse_to(level, s1.first, s1.second), SurfEnd::collapse_to(level, s2.first, s2.second), false};
}

// Image of the section point under an endomorphism.
void push_section(const SurfEnd& f, std::pair<int, int>& s1, std::pair<int, int>&) {
  s1 = f.act_on_point(s1.first, s1.second);
}

void push_section(const TensorEnd& f, std::pair<int, int>& s1, std::pair<int, int>& s2) {
  if (f.swap) std::swap(s1, s2);
  s1 = f.left.act_on_point(s1.first, s1.second);
  s2 = f.right.act_on_point(s2.first, s2.second);
}

SurfEnd endo_compose(const SurfEnd& a, const SurfEnd& b) { return surf_compose(a, b); }
TensorEnd endo_compose(const TensorEnd& a, const TensorEnd& b) { return tensor_compose(a, b); }

// Endomorphisms preserve fibers, so projection absorbs them.
template <class End, class Collapse>
Arrow<End> compose(int level, const Arrow<End>& after, const Arrow<End>& before, Collapse collapse) {
  using K = typename Arrow<End>::Kind;
  if (after.source_is_total() != before.target_is_total()) throw std::logic_error("arrows do not compose");
  if (after.kind == K::BaseIdentity) return before;
  if (before.kind == K::BaseIdentity) return after;
  if (after.kind == K::Endo && before.kind == K::Endo) return {K::Endo, endo_compose(*after.endo, *before.endo)};
  if (after.kind == K::Projection && before.kind == K::Endo) return after;
  if (after.kind == K::Projection && before.kind == K::Section) return {K::BaseIdentity, std::nullopt};
  if (after.kind == K::Endo && before.kind == K::Section) {
    Arrow<End> r = before;
    push_section(*after.endo, r.sec1, r.sec2);
    return r;
  }
  if (after.kind == K::Section && before.kind == K::Projection)
    return {K::Endo, collapse(level, after.sec1, after.sec2)};
  throw std::logic_error("arrows do not compose");
}

template <class End, class Collapse>
Arrow<End> chain(int level, std::initializer_list<Arrow<End>> arrows, Collapse collapse) {
  auto it = arrows.begin();
  Arrow<End> acc = *it++;
  for (; it != arrows.end(); ++it) acc = compose(level, acc, *it, collapse);
  return acc;
}

}  // namespace

Certificate verify_structure_identities(int level) {
  require_level(level);
  Certificate cert;
  cert.subject = "structure identities";
  cert.level = level;
  const char* lemma = "zero-section and projection identities";

  using SK = SArrow::Kind;
  SArrow phi{SK::Projection, std::nullopt};
  SArrow alpha{SK::Section, std::nullopt};
  SArrow mu0{SK::Endo, SurfEnd::collapse_to(level, 0, 0)};
  SArrow id_base{SK::BaseIdentity, std::nullopt};

  cert.add("phi . alpha(0) = id_base", lemma, "phi . alpha(0)", "id_base",
           chain(level, {phi, alpha}, collapse_onto) == id_base);
  cert.add("phi . mu0 . alpha(0) = id_base", lemma, "phi . mu0 . alpha(0)", "id_base",
           chain(level, {phi, mu0, alpha}, collapse_onto) == id_base);
  cert.add("mu0 . alpha(0) . phi . mu0 = mu0", lemma, "mu0 . alpha(0) . phi . mu0", "mu0",
           chain(level, {mu0, alpha, phi, mu0}, collapse_onto) == mu0);

  using TK = TArrow::Kind;
  TArrow tphi{TK::Projection, std::nullopt};
  TArrow talpha{TK::Section, std::nullopt};
  TArrow tmu00{TK::Endo, tensor_compose({SurfEnd::collapse_to(level, 0, 0), SurfEnd::identity(level), false},
                                        {SurfEnd::identity(level), SurfEnd::collapse_to(level, 0, 0), false})};
  TArrow tid{TK::BaseIdentity, std::nullopt};

  cert.add("phi2 . alpha2(0) = id_base", lemma, "phi2 . alpha2(0)", "id_base",
           chain(level, {tphi, talpha}, collapse_onto_pair) == tid);
  cert.add("phi2 . mu(0,0) . alpha2(0) = id_base", lemma, "phi2 . mu(0,0) . alpha2(0)", "id_base",
           chain(level, {tphi, tmu00, talpha}, collapse_onto_pair) == tid);
  cert.add("mu(0,0) . alpha2(0) . phi2 . mu(0,0) = mu(0,0)", lemma, "mu(0,0) . alpha2(0) . phi2 . mu(0,0)",
           "mu(0,0)", chain(level, {tmu00, talpha, tphi, tmu00}, collapse_onto_pair) == tmu00);

  // Every automorphism fixes the projection; sections move with the group.
  bool moves = true;
  for (const auto& g : enumerate_group(level)) {
    SArrow e{SK::Endo, SurfEnd::automorphism(g)};
    auto moved = compose(level, e, alpha, collapse_onto);
    moves = moves && moved.kind == SK::Section && moved.sec1 == g.act_on_point(0, 0) &&
            compose(level, phi, e, collapse_onto) == phi;
  }
  cert.add("phi . g = phi and g . alpha(0) = alpha(g 0) for all g", lemma, "all g in G", "fiberwise", moves);
  return cert;
}

}  // namespace motive
