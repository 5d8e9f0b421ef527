#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motive/errors.hpp"
#include "motive/exact_math.hpp"

namespace motive {

inline int mod(long a, long n) {
  long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Element (b, s) of G = (Z/N)^2 x| mu_2, acting on points by x -> s*x + b.
struct GElem {
  int level = 3;
  int b1 = 0;
  int b2 = 0;
  int s = 1;

  static GElem identity(int level) { return {level, 0, 0, 1}; }
  static GElem translation(int level, long b1, long b2) { return {level, mod(b1, level), mod(b2, level), 1}; }
  static GElem inversion(int level) { return {level, 0, 0, -1}; }
  static GElem make(int level, long b1, long b2, int s) { return {level, mod(b1, level), mod(b2, level), s}; }

  bool is_identity() const { return b1 == 0 && b2 == 0 && s == 1; }
  GElem inverse() const { return make(level, -s * b1, -s * b2, s); }

  // Image of a fiber component index (first coordinate of the torsion label).
  int act_on_index(int m) const { return mod(static_cast<long>(s) * m + b1, level); }
  // Image of the half-integer index m + 1/2, both stored by their floor m.
  int act_on_half_index(int m) const { return s == 1 ? mod(m + b1, level) : mod(b1 - m - 1, level); }
  // Image of a torsion section b.
  std::pair<int, int> act_on_point(int p1, int p2) const {
    return {mod(static_cast<long>(s) * p1 + b1, level), mod(static_cast<long>(s) * p2 + b2, level)};
  }

  std::string to_string() const;
  friend auto operator<=>(const GElem&, const GElem&) = default;
};

GElem g_mul(const GElem& x, const GElem& y);
int epsilon(const GElem& x);
std::vector<GElem> enumerate_group(int level);

// Element (g1, g2, swap) of G^2 x| S_2, acting by applying the swap first.
struct G2Elem {
  GElem g1;
  GElem g2;
  bool swap = false;

  static G2Elem identity(int level) { return {GElem::identity(level), GElem::identity(level), false}; }
  static G2Elem sigma(int level) { return {GElem::identity(level), GElem::identity(level), true}; }
  int level() const { return g1.level; }
  G2Elem inverse() const;
  std::string to_string() const;
  friend auto operator<=>(const G2Elem&, const G2Elem&) = default;
};

G2Elem g2_mul(const G2Elem& x, const G2Elem& y);
int epsilon2(const G2Elem& x);

inline GElem group_mul(const GElem& x, const GElem& y) { return g_mul(x, y); }
inline G2Elem group_mul(const G2Elem& x, const G2Elem& y) { return g2_mul(x, y); }

// Exact-rational formal sum over a finite group.
template <class E>
class GroupRing {
 public:
  explicit GroupRing(int level = 3) : level_(level) {}

  static GroupRing unit(const E& e, Rational c = 1) {
    GroupRing r(level_of(e));
    r.add(e, std::move(c));
    return r;
  }

  int level() const { return level_; }
  const std::map<E, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const E& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const E& e, const Rational& c) {
    require_same_level(level_, level_of(e));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GroupRing& operator+=(const GroupRing& o) {
    require_same_level(level_, o.level_);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  GroupRing& operator-=(const GroupRing& o) {
    require_same_level(level_, o.level_);
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  friend GroupRing operator+(GroupRing a, const GroupRing& b) { return a += b; }
  friend GroupRing operator-(GroupRing a, const GroupRing& b) { return a -= b; }
  friend GroupRing operator*(const Rational& k, GroupRing a) {
    if (k.is_zero()) return GroupRing(a.level_);
    for (auto& [e, c] : a.terms_) c *= k;
    return a;
  }
  friend GroupRing operator*(const GroupRing& a, const GroupRing& b) {
    require_same_level(a.level_, b.level_);
    GroupRing r(a.level_);
    for (const auto& [x, cx] : a.terms_)
      for (const auto& [y, cy] : b.terms_) r.add(group_mul(x, y), cx * cy);
    return r;
  }
  friend bool operator==(const GroupRing& a, const GroupRing& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }

  // Image under the anti-involution g -> g^{-1}.
  GroupRing inverted() const {
    GroupRing r(level_);
    for (const auto& [e, c] : terms_) r.add(e.inverse(), c);
    return r;
  }

 private:
  static int level_of(const GElem& e) { return e.level; }
  static int level_of(const G2Elem& e) { return e.level(); }

  int level_;
  std::map<E, Rational> terms_;
};

using QG = GroupRing<GElem>;
using QG2 = GroupRing<G2Elem>;

// (1 / 2N^2) sum_g eps(g)^{-1} g.
QG epsilon_projector(int level);

struct LambdaTheta {
  QG lambda;  // (1 - inversion) / 2
  QG theta;   // average over translations
};
LambdaTheta lambda_theta(int level);

struct Symmetrizers {
  QG2 a2;  // (1 + sigma) / 2
  QG2 s2;  // (1 - sigma) / 2
};
Symmetrizers symmetrizers(int level);

// eps2-projector on the untwisted subgroup G^2.
QG2 epsilon2_projector(int level);

// Tensor product u (x) v as an element of Q[G^2].
QG2 tensor(const QG& u, const QG& v);

}  // namespace motive
