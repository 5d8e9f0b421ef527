#include "motive/motive_report.hpp"

#include <algorithm>
#include <stdexcept>

#include "motive/errors.hpp"
#include "motive/exact_math.hpp"
#include "motive/surface_calculus.hpp"

namespace motive {

long Count::value(std::optional<long> n_value) const {
  if (n_coeff == 0) return constant;
  if (!n_value) throw SymbolicMultiplicity();
  return constant + n_coeff * *n_value;
}

std::string Count::to_string() const {
  if (n_coeff == 0) return std::to_string(constant);
  std::string s = n_coeff == 1 ? "n" : std::to_string(n_coeff) + "n";
  if (constant > 0) s += " + " + std::to_string(constant);
  if (constant < 0) s += " - " + std::to_string(-constant);
  return s;
}

int MotiveKey::degree() const {
  switch (kind) {
    case BasisKind::Unit: return 0;
    case BasisKind::L: return 2 * twist;
    case BasisKind::H1M: return 1 + 2 * twist;
    case BasisKind::W1: return 2 + 2 * twist;
    case BasisKind::W2: return 3;
  }
  return 0;
}

std::vector<int> MotiveKey::chow_degrees() const {
  switch (kind) {
    case BasisKind::Unit: return {0};
    case BasisKind::L: return {twist};
    case BasisKind::H1M: return {twist + 1};
    case BasisKind::W1: return {twist + 2};
    case BasisKind::W2: return {2, 3};
  }
  return {};
}

std::string MotiveKey::to_string() const {
  auto lpow = [](int k) { return k == 1 ? std::string("L") : "L^" + std::to_string(k); };
  switch (kind) {
    case BasisKind::Unit: return "1";
    case BasisKind::L: return lpow(twist);
    case BasisKind::H1M: return twist == 0 ? "h1(M)" : "h1(M)(x)" + lpow(twist);
    case BasisKind::W1: return twist == 0 ? "W1" : "W1(x)" + lpow(twist);
    case BasisKind::W2: return "W2";
  }
  return "?";
}

namespace {

std::string term(const Count& c, const MotiveKey& k) {
  if (c == Count::of(1)) return k.to_string();
  bool compound = k.kind != BasisKind::Unit && k.to_string().find("(x)") != std::string::npos;
  std::string coeff = c.is_symbolic() && c.constant != 0 ? "(" + c.to_string() + ")" : c.to_string();
  return coeff + " " + (compound ? "(" + k.to_string() + ")" : k.to_string());
}

}  // namespace

std::string Motive::to_string() const {
  std::string s;
  for (const auto& [k, c] : parts) {
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += term(c, k);
  }
  return s.empty() ? "0" : s;
}

Motive decompose_surface(int level) {
  require_level(level);
  const long c = cusp_count(level);
  Motive m;
  m.variety = "surface";
  m.dimension = 2;
  m.level = level;
  m.parts[{BasisKind::Unit, 0}] = Count::of(1);
  m.parts[{BasisKind::L, 1}] = Count::of(2 + (level - 1) * c);
  m.parts[{BasisKind::L, 2}] = Count::of(1);
  m.parts[{BasisKind::H1M, 0}] = Count::of(1);
  m.parts[{BasisKind::H1M, 1}] = Count::of(1);
  m.parts[{BasisKind::W1, 0}] = Count::of(1);
  return m;
}

Motive decompose_threefold(int level) {
  require_level(level);
  Motive m;
  m.variety = "threefold";
  m.dimension = 3;
  m.level = level;
  m.parts[{BasisKind::Unit, 0}] = Count::of(1);
  m.parts[{BasisKind::L, 1}] = Count::n();
  m.parts[{BasisKind::L, 2}] = Count::n();
  m.parts[{BasisKind::L, 3}] = Count::of(1);
  m.parts[{BasisKind::H1M, 0}] = Count::of(1);
  m.parts[{BasisKind::H1M, 1}] = Count::of(3);
  m.parts[{BasisKind::H1M, 2}] = Count::of(1);
  m.parts[{BasisKind::W1, 0}] = Count::of(2);
  m.parts[{BasisKind::W1, 1}] = Count::of(2);
  m.parts[{BasisKind::W2, 0}] = Count::of(1);
  return m;
}

SurfaceMultiplicity surface_multiplicity(int level) {
  LevelInvariants inv = level_invariants(level);
  SurfaceMultiplicity r;
  r.assembly = 2 + (level - 1) * inv.cusp_count;
  // (1/2) N^2 (N - 1) prod_{p | N} (1 - p^-2), evaluated on its own.
  Rational v = Rational(static_cast<long>(level) * level * (level - 1), 2);
  long rest = level;
  for (long p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    v *= Rational(p * p - 1, p * p);
    while (rest % p == 0) rest /= p;
  }
  r.closed_form = v.to_long();
  // NS rank: hyperbolic plane of zero section and fibre, plus the reduced
  // Neron block at every cusp. The zero-section self-intersection only needs
  // to be some number for the rank; -mu/12 is used.
  RatMatrix plane{{Rational(-inv.euler_index, 12), Rational(1)}, {Rational(1), Rational(0)}};
  NeronLattice L = neron_lattice(level);
  r.ns_rank = static_cast<long>(mat_rank(plane)) + inv.cusp_count * static_cast<long>(mat_rank(L.reduced_block));
  long b2 = inv.euler_index - 2 + 4 * inv.genus;
  r.from_betti = b2 - 2 * inv.s3;
  return r;
}

Count BettiTable::euler() const {
  Count e;
  for (std::size_t i = 0; i < b.size(); ++i) e = e + ((i % 2 == 0) ? 1L : -1L) * b[i];
  return e;
}

bool BettiTable::poincare_symmetric() const {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!(b[i] == b[b.size() - 1 - i])) return false;
  return true;
}

BettiTable realize_betti(const Motive& m, bool numeric, std::optional<long> n_value) {
  LevelInvariants inv = level_invariants(m.level);
  BettiTable t;
  t.b.assign(static_cast<std::size_t>(2 * m.dimension + 1), Count{});
  t.attribution.assign(t.b.size(), {});
  for (const auto& [k, c] : m.parts) {
    if (c.is_zero()) continue;
    long dim = 0;
    switch (k.kind) {
      case BasisKind::Unit:
      case BasisKind::L: dim = 1; break;
      case BasisKind::H1M: dim = 2 * inv.genus; break;
      case BasisKind::W1: dim = 2 * inv.s3; break;
      case BasisKind::W2: dim = 2 * inv.s4; break;
    }
    auto d = static_cast<std::size_t>(k.degree());
    if (numeric || n_value) {
      t.b[d] = t.b[d] + Count::of(c.value(n_value) * dim);
    } else {
      t.b[d] = t.b[d] + dim * c;
    }
    t.attribution[d].push_back(term(c, k));
  }
  return t;
}

std::string CkRow::to_string() const {
  std::string s = "h" + std::to_string(degree) + " = ";
  if (constituents.empty()) return s + "0";
  for (std::size_t i = 0; i < constituents.size(); ++i) {
    if (i) s += " + ";
    s += term(constituents[i].first, constituents[i].second);
  }
  return s;
}

std::vector<CkRow> chow_kunneth_table(const Motive& m) {
  std::vector<CkRow> rows(static_cast<std::size_t>(2 * m.dimension + 1));
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].degree = static_cast<int>(i);
  for (const auto& [k, c] : m.parts)
    if (!c.is_zero()) rows[static_cast<std::size_t>(k.degree())].constituents.emplace_back(c, k);
  return rows;
}

std::string GradedPiece::to_string() const {
  std::string s = "gr" + std::to_string(nu) + " = ";
  if (pieces.empty()) return s + "0";
  for (std::size_t i = 0; i < pieces.size(); ++i) s += (i ? " + " : "") + pieces[i];
  return s;
}

namespace {

std::string piece_label(const MotiveKey& k, int j) {
  switch (k.kind) {
    case BasisKind::Unit:
    case BasisKind::L: return "Q";
    case BasisKind::H1M: return "Jac(M̄)⊗Q";
    case BasisKind::W1: return "CH²_alb(Ē)";
    case BasisKind::W2: return j == 2 ? "CH²(W₂)" : "CH³(W₂)";
  }
  return "?";
}

std::string with_count(const std::string& label, const Count& c) {
  if (c == Count::of(1)) return label;
  if (label == "Q") return "Q^" + c.to_string();
  return label + "⊕" + c.to_string();
}

std::string step_name(const Motive& m, int j, int nu) {
  std::string J = std::to_string(j);
  switch (nu) {
    case 0: return "F0 = CH" + J;
    case 1: return "F1 = CH" + J + "_hom";
    case 2:
      if (m.dimension == 3 && j == 2) return "F2 ⊆ CH2_AJ";
      return "F2 = CH" + J + "_alb";
    default: return "F" + std::to_string(nu);
  }
}

}  // namespace

FiltrationTable filtration_table(const Motive& m) {
  FiltrationTable t;
  t.variety = m.variety;
  t.level = m.level;
  t.vanishing_ok = true;
  for (const auto& [k, c] : m.parts) {
    if (c.is_zero()) continue;
    for (int j : k.chow_degrees()) {
      int i = k.degree();
      if (i < j || i > 2 * j) t.vanishing_ok = false;
    }
  }
  for (int j = 1; j <= m.dimension; ++j) {
    FiltrationRow row;
    row.codim = j;
    row.steps = j;
    for (int nu = 0; nu <= j; ++nu) {
      GradedPiece g;
      g.nu = nu;
      g.step = step_name(m, j, nu);
      g.from_degree = 2 * j - nu;
      for (const auto& [k, c] : m.parts) {
        if (c.is_zero() || k.degree() != g.from_degree) continue;
        auto ds = k.chow_degrees();
        if (std::find(ds.begin(), ds.end(), j) == ds.end()) continue;
        g.pieces.push_back(with_count(piece_label(k, j), c));
      }
      row.graded.push_back(std::move(g));
    }
    t.rows.push_back(std::move(row));
  }

  // Deduction pattern for CH^1: pi_1 is the identity on CH^1_hom, and the
  // remaining conclusions follow from orthogonality.
  auto ch1_in = [&](int i) {
    for (const auto& [k, c] : m.parts) {
      if (c.is_zero() || k.degree() != i) continue;
      auto ds = k.chow_degrees();
      if (std::find(ds.begin(), ds.end(), 1) != ds.end()) return true;
    }
    return false;
  };
  bool others_vanish = true;
  for (int i = 0; i <= 2 * m.dimension; ++i)
    if (i != 1 && i != 2 && ch1_in(i)) others_vanish = false;
  const auto& gr1 = t.rows.front().graded[1].pieces;
  bool hom_is_jac = gr1.size() == 1 && gr1.front() == "Jac(M̄)⊗Q";
  t.ch1_checklist = {
      {"hypothesis: pi_1 acts as the identity on CH1_hom = Jac(M̄)⊗Q", hom_is_jac},
      {"pi_i(xi) = 0 for i != 1, 2", others_vanish},
      {"xi = pi_1(xi) + pi_2(xi)", others_vanish && hom_is_jac},
      {"Ker pi_2 = CH1_hom", hom_is_jac},
  };
  return t;
}

}  // namespace motive
