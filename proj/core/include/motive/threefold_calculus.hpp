#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "motive/certificate.hpp"
#include "motive/formal_sum.hpp"
#include "motive/open_part.hpp"
#include "motive/surface_calculus.hpp"

namespace motive {

// (left (x) right) sigma^swap on the fibre square; the swap acts first.
// Factors are Graph, TGraph or Vert; a Vert factor carries the support label
// of the corresponding correction cycle, and Vert (x) Vert is never stored.
struct TAtom {
  SurfAtom left;
  SurfAtom right;
  bool swap = false;

  static TAtom make(const SurfAtom& left, const SurfAtom& right, bool swap = false);

  bool is_null() const { return left.kind == SurfKind::Vert && right.kind == SurfKind::Vert; }
  // 0: no vertical factor; 1 or 2: the factor carrying it.
  int support_label() const;

  std::uint64_t hash() const;
  std::string to_string() const;
  friend auto operator<=>(const TAtom&, const TAtom&) = default;
};

using TCorr = FormalSum<TAtom>;

template <class Emit>
void compose_t_atoms(int level, const TAtom& after, const TAtom& before, Emit&& emit);

TCorr t_identity(int level);
TCorr t_sigma(int level);
TCorr tensor(const SurfCorr& a, const SurfCorr& b, bool swap = false);
TCorr t_compose(const TCorr& after, const TCorr& before);
TCorr transpose(const TCorr& x);
// sigma o x o sigma.
TCorr swap_conjugate(const TCorr& x);
std::string render(const TCorr& x);

// --- factored sums of pure tensors -------------------------------------------

template <class Corr>
struct PureTensor {
  Rational coeff;
  Corr left;
  Corr right;
  bool swap = false;
};

// Sum of coeff * (left (x) right) sigma^swap with the factors kept apart, so
// that products cost two surface compositions instead of a full expansion.
template <class Corr>
class TensorSum {
 public:
  explicit TensorSum(int level = 3) : level_(level) {}
  static TensorSum pure(const Corr& left, const Corr& right, bool swap = false, Rational c = 1) {
    TensorSum t(left.level());
    t.push(std::move(c), left, right, swap);
    return t;
  }

  int level() const { return level_; }
  const std::vector<PureTensor<Corr>>& terms() const { return terms_; }

  void push(Rational c, Corr left, Corr right, bool swap) {
    if (c.is_zero() || left.is_zero() || right.is_zero()) return;
    terms_.push_back({std::move(c), std::move(left), std::move(right), swap});
  }

  TensorSum& operator+=(const TensorSum& o) {
    require_same_level(level_, o.level_);
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
  }
  TensorSum& operator-=(const TensorSum& o) { return *this += Rational(-1) * o; }
  friend TensorSum operator+(TensorSum a, const TensorSum& b) { return a += b; }
  friend TensorSum operator-(TensorSum a, const TensorSum& b) { return a -= b; }
  friend TensorSum operator*(const Rational& k, TensorSum a) {
    if (k.is_zero()) return TensorSum(a.level_);
    for (auto& t : a.terms_) t.coeff *= k;
    return a;
  }

 private:
  int level_;
  std::vector<PureTensor<Corr>> terms_;
};

template <class Corr, class Compose>
TensorSum<Corr> factored_compose(const TensorSum<Corr>& after, const TensorSum<Corr>& before, Compose&& comp) {
  require_same_level(after.level(), before.level());
  TensorSum<Corr> out(after.level());
  for (const auto& x : after.terms())
    for (const auto& y : before.terms()) {
      const Corr& u = x.swap ? y.right : y.left;
      const Corr& v = x.swap ? y.left : y.right;
      Corr l = comp(x.left, u);
      if (l.is_zero()) continue;
      out.push(x.coeff * y.coeff, std::move(l), comp(x.right, v), x.swap != y.swap);
    }
  return out;
}

using SurfTensorSum = TensorSum<SurfCorr>;
using OpenTensorSum = TensorSum<OpenCorr>;

SurfTensorSum factored_compose(const SurfTensorSum& after, const SurfTensorSum& before);
SurfTensorSum transpose(const SurfTensorSum& x);
SurfTensorSum swap_conjugate(const SurfTensorSum& x);
SurfTensorSum t_identity_factored(int level);
SurfTensorSum t_sigma_factored(int level);
TCorr expand(const SurfTensorSum& x);

OpenTensorSum restrict_factored(const SurfTensorSum& x);
OpenTensorSum open_factored_compose(const OpenTensorSum& after, const OpenTensorSum& before);
OpenTCorr expand(const OpenTensorSum& x);

// psi^2#: Vert-carrying atoms die, factors restrict to affine graphs.
OpenTCorr restrict_to_open_t(const TCorr& x);

// --- projectors ----------------------------------------------------------------

struct ThreefoldProjectors {
  int level = 3;
  std::array<std::array<SurfTensorSum, 3>, 2> factor;  // factor[j-1][i]: pi~_i^(j)
  std::array<std::array<SurfTensorSum, 3>, 3> pi;      // pi~_{i1,i2}
  SurfTensorSum b1;                                    // Vert/2 (x) Delta
  SurfTensorSum b2;                                    // Delta (x) Vert/2
};

ThreefoldProjectors build_pi_tildes(int level);
// (A2 o pi~_{1,1}, S2 o pi~_{1,1}) with A2 = (1 + sigma)/2, S2 = (1 - sigma)/2.
std::pair<SurfTensorSum, SurfTensorSum> split_sym_alt(int level);
// Delta - sum of the nine pi~_{i1,i2}.
SurfTensorSum threefold_residual(int level);

// --- divisors on the fibre square --------------------------------------------

enum class T3Kind : std::uint8_t { Generic = 0, ThetaInt = 1, ThetaHalf = 2 };

// ThetaHalf(c, m, n) is the quadric indexed by (m + 1/2, n + 1/2).
struct T3Div {
  T3Kind kind = T3Kind::Generic;
  std::uint16_t cusp = 0;
  std::uint8_t m = 0;
  std::uint8_t n = 0;

  static T3Div generic() { return {}; }
  static T3Div theta(int cusp, int m, int n);
  static T3Div quadric(int cusp, int m, int n);

  std::uint64_t hash() const {
    return static_cast<std::uint64_t>(kind) | (static_cast<std::uint64_t>(cusp) << 2) |
           (static_cast<std::uint64_t>(m) << 18) | (static_cast<std::uint64_t>(n) << 26);
  }
  std::string to_string() const;
  friend auto operator<=>(const T3Div&, const T3Div&) = default;
};

using ThreefoldDivClass = FormalSum<T3Div>;

// Sum of components with multiplicities: 1 on each Theta, 2 on each quadric.
ThreefoldDivClass full_cusp_fiber3(int level, int cusp);
std::vector<T3Div> cusp_components(int level, int cusp);

ThreefoldDivClass act_t_atom_on_basis(int level, const TAtom& a, const T3Div& z);
ThreefoldDivClass act_on_threefold_divisor(const TCorr& x, const ThreefoldDivClass& z);
ThreefoldDivClass act_on_threefold_divisor(const SurfTensorSum& x, const ThreefoldDivClass& z);

// Factor atoms allowed in a TAtom at this level.
std::vector<SurfAtom> restricted_factor_atoms(int level);

Certificate threefold_certificate(int level);

// ---------------------------------------------------------------------------

template <class Emit>
void compose_t_atoms(int level, const TAtom& x, const TAtom& y, Emit&& emit) {
  const SurfAtom& u = x.swap ? y.right : y.left;
  const SurfAtom& v = x.swap ? y.left : y.right;
  const bool swap = x.swap != y.swap;
  compose_atoms(level, x.left, u, [&](const SurfAtom& l, long kl) {
    compose_atoms(level, x.right, v, [&](const SurfAtom& r, long kr) {
      if (l.kind == SurfKind::Vert && r.kind == SurfKind::Vert) return;
      emit(TAtom{l, r, swap}, kl * kr);
    });
  });
}

}  // namespace motive
