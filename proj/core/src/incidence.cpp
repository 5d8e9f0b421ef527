#include "motive/incidence.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "motive/errors.hpp"
#include "motive/formal_sum.hpp"
#include "motive/level_arithmetic.hpp"
#include "motive/symmetry_algebra.hpp"

namespace motive {

std::string Component::label() const {
  if (type == ComponentType::ProperTransform) return "T(" + std::to_string(m) + "," + std::to_string(n) + ")";
  return "Q(" + std::to_string(m) + "+1/2," + std::to_string(n) + "+1/2)";
}

std::size_t IncidenceComplex::index_of(ComponentType t, int m, int n) const {
  std::size_t base = t == ComponentType::ProperTransform ? 0 : static_cast<std::size_t>(level) * level;
  return base + static_cast<std::size_t>(mod(m, level)) * level + static_cast<std::size_t>(mod(n, level));
}

std::vector<std::size_t> IncidenceComplex::neighbours(std::size_t component) const {
  std::vector<std::size_t> out;
  for (const Curve& c : curves) {
    if (c.a == component) out.push_back(c.b);
    if (c.b == component) out.push_back(c.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IncidenceComplex cusp_incidence(int level) {
  require_level(level);
  IncidenceComplex x;
  x.level = level;
  using CT = ComponentType;
  for (int m = 0; m < level; ++m)
    for (int n = 0; n < level; ++n) x.components.push_back({CT::ProperTransform, m, n, 8, 1});
  for (int m = 0; m < level; ++m)
    for (int n = 0; n < level; ++n) x.components.push_back({CT::Quadric, m, n, 4, 2});

  for (int m = 0; m < level; ++m)
    for (int n = 0; n < level; ++n) {
      std::size_t t = x.index_of(CT::ProperTransform, m, n);
      // A node line of a ruled component, blown up at both ends.
      x.curves.push_back({t, x.index_of(CT::ProperTransform, m + 1, n), 2, -2, -2});
      x.curves.push_back({t, x.index_of(CT::ProperTransform, m, n + 1), 2, -2, -2});
    }
  for (int m = 0; m < level; ++m)
    for (int n = 0; n < level; ++n) {
      std::size_t q = x.index_of(CT::Quadric, m, n);
      // Exceptional line in the proper transform, a ruling line in the quadric.
      for (auto [dm, dn] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}})
        x.curves.push_back({x.index_of(CT::ProperTransform, m + dm, n + dn), q, 2, -1, 0});
      // Corners of the square of lines on the quadric.
      std::size_t t00 = x.index_of(CT::ProperTransform, m, n), t10 = x.index_of(CT::ProperTransform, m + 1, n),
                  t01 = x.index_of(CT::ProperTransform, m, n + 1),
                  t11 = x.index_of(CT::ProperTransform, m + 1, n + 1);
      x.triple_points.push_back({t00, t10, q});
      x.triple_points.push_back({t10, t11, q});
      x.triple_points.push_back({t11, t01, q});
      x.triple_points.push_back({t01, t00, q});
    }
  return x;
}

long euler_fiber(const IncidenceComplex& x) {
  long e = 0;
  for (const Component& c : x.components) e += c.euler;
  for (const Curve& c : x.curves) e -= c.euler;
  e += static_cast<long>(x.triple_points.size());
  return e;
}

long euler_fiber(int level) { return euler_fiber(cusp_incidence(level)); }

RatMatrix component_curve_matrix(const IncidenceComplex& x) {
  RatMatrix M(x.components.size(), x.curves.size());
  for (std::size_t j = 0; j < x.curves.size(); ++j) {
    const Curve& c = x.curves[j];
    // D_a . C is the self-intersection of C inside the other component.
    M.at(c.a, j) += Rational(c.self_in_b);
    M.at(c.b, j) += Rational(c.self_in_a);
    for (const TriplePoint& p : x.triple_points) {
      std::size_t ids[3] = {p.a, p.b, p.c};
      bool has_a = std::find(std::begin(ids), std::end(ids), c.a) != std::end(ids);
      bool has_b = std::find(std::begin(ids), std::end(ids), c.b) != std::end(ids);
      if (!has_a || !has_b) continue;
      for (std::size_t k : ids)
        if (k != c.a && k != c.b) M.at(k, j) += Rational(1);
    }
  }
  return M;
}

std::vector<long> fibre_degree_on_curves(const IncidenceComplex& x) {
  RatMatrix M = component_curve_matrix(x);
  std::vector<long> out(x.curves.size(), 0);
  for (std::size_t j = 0; j < x.curves.size(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.components.size(); ++i) s += Rational(x.components[i].multiplicity) * M.at(i, j);
    out[j] = s.to_long();
  }
  return out;
}

namespace {

// Rank modulo a prime; a lower bound for the rank over Q of an integer matrix.
std::size_t rank_mod_p(const RatMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      long v = m.at(i, j).to_long();
      a[i][j] = static_cast<std::uint64_t>(((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p));
    }
  auto mulm = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<detail::u128>(x) * y % p);
  };
  auto powm = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, b = mulm(b, b))
      if (e & 1) r = mulm(r, b);
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    std::uint64_t inv = powm(a[rank][c], p - 2);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      std::uint64_t f = mulm(a[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) a[r][k] = (a[r][k] + p - mulm(f, a[rank][k])) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t vertical_lattice_rank(const IncidenceComplex& x) {
  RatMatrix M = component_curve_matrix(x);
  // The weighted fibre pairs to zero with every curve, so rank <= rows - 1.
  // A modular rank reaching that bound therefore certifies the exact rank.
  bool fibre_in_kernel = true;
  for (long d : fibre_degree_on_curves(x)) fibre_in_kernel = fibre_in_kernel && d == 0;
  std::size_t bound = M.rows() - (fibre_in_kernel ? 1 : 0);
  std::size_t r = rank_mod_p(M, 2305843009213693951ULL);
  if (r == bound) return r;
  return mat_rank(M);
}

NEstimate estimate_n(int level) {
  require_level(level);
  LevelInvariants inv = level_invariants(level);
  IncidenceComplex x = cusp_incidence(level);
  NEstimate e;
  e.level = level;
  e.euler_fiber = euler_fiber(x);
  e.lattice_rank_per_cusp = vertical_lattice_rank(x);
  // e = 2 - 4g + 2 b2 - b3 with b2 = n + 4 s3 and b3 = 6g + 2 s4.
  long total = inv.cusp_count * e.euler_fiber;
  long twice = total - 2 + 4 * inv.genus + 6 * inv.genus + 2 * inv.s4;
  if (twice % 2 != 0) throw std::logic_error("odd Euler balance");
  e.n_euler = twice / 2 - 4 * inv.s3;
  e.n_lattice = 4 + inv.cusp_count * static_cast<long>(e.lattice_rank_per_cusp);
  e.consistent = e.n_euler == e.n_lattice && e.n_euler > 0;
  return e;
}

}  // namespace motive
