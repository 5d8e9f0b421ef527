#include "motive/symmetry_algebra.hpp"

namespace motive {

std::string GElem::to_string() const {
  return "(" + std::to_string(b1) + "," + std::to_string(b2) + "," + (s == 1 ? "+" : "-") + ")";
}

GElem g_mul(const GElem& x, const GElem& y) {
  require_same_level(x.level, y.level);
  return GElem::make(x.level, x.b1 + x.s * y.b1, x.b2 + x.s * y.b2, x.s * y.s);
}

int epsilon(const GElem& x) { return x.s; }

std::vector<GElem> enumerate_group(int level) {
  require_level(level);
  std::vector<GElem> out;
  out.reserve(2 * level * level);
  for (int b1 = 0; b1 < level; ++b1)
    for (int b2 = 0; b2 < level; ++b2)
      for (int s : {-1, 1}) out.push_back({level, b1, b2, s});
  return out;
}

G2Elem G2Elem::inverse() const {
  // (g1 (x) g2) sigma^e inverts to sigma^e (g1^-1 (x) g2^-1) = (x (x) y) sigma^e.
  GElem a = g1.inverse(), b = g2.inverse();
  if (swap) std::swap(a, b);
  return {a, b, swap};
}

std::string G2Elem::to_string() const {
  return "[" + g1.to_string() + "," + g2.to_string() + (swap ? ",sigma]" : "]");
}

G2Elem g2_mul(const G2Elem& x, const G2Elem& y) {
  require_same_level(x.level(), y.level());
  const GElem& u = x.swap ? y.g2 : y.g1;
  const GElem& v = x.swap ? y.g1 : y.g2;
  return {g_mul(x.g1, u), g_mul(x.g2, v), x.swap != y.swap};
}

int epsilon2(const G2Elem& x) { return epsilon(x.g1) * epsilon(x.g2); }

QG epsilon_projector(int level) {
  require_level(level);
  QG p(level);
  Rational w(1, 2L * level * level);
  for (const auto& g : enumerate_group(level)) p.add(g, epsilon(g) == 1 ? w : -w);
  return p;
}

LambdaTheta lambda_theta(int level) {
  require_level(level);
  LambdaTheta lt{QG(level), QG(level)};
  lt.lambda.add(GElem::identity(level), Rational(1, 2));
  lt.lambda.add(GElem::inversion(level), Rational(-1, 2));
  Rational w(1, static_cast<long>(level) * level);
  for (int b1 = 0; b1 < level; ++b1)
    for (int b2 = 0; b2 < level; ++b2) lt.theta.add(GElem::translation(level, b1, b2), w);
  return lt;
}

Symmetrizers symmetrizers(int level) {
  require_level(level);
  Symmetrizers s{QG2(level), QG2(level)};
  s.a2.add(G2Elem::identity(level), Rational(1, 2));
  s.a2.add(G2Elem::sigma(level), Rational(1, 2));
  s.s2.add(G2Elem::identity(level), Rational(1, 2));
  s.s2.add(G2Elem::sigma(level), Rational(-1, 2));
  return s;
}

QG2 tensor(const QG& u, const QG& v) {
  require_same_level(u.level(), v.level());
  QG2 r(u.level());
  for (const auto& [x, cx] : u.terms())
    for (const auto& [y, cy] : v.terms()) r.add({x, y, false}, cx * cy);
  return r;
}

QG2 epsilon2_projector(int level) {
  QG p = epsilon_projector(level);
  return tensor(p, p);
}

}  // namespace motive
