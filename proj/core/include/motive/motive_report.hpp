#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motive/level_arithmetic.hpp"

namespace motive {

// A count that may involve the undetermined multiplicity n: constant + n_coeff * n.
struct Count {
  long constant = 0;
  long n_coeff = 0;

  static Count of(long c) { return {c, 0}; }
  static Count n() { return {0, 1}; }
  bool is_symbolic() const { return n_coeff != 0; }
  bool is_zero() const { return constant == 0 && n_coeff == 0; }
  long value(std::optional<long> n_value = std::nullopt) const;
  std::string to_string() const;

  friend Count operator+(Count a, Count b) { return {a.constant + b.constant, a.n_coeff + b.n_coeff}; }
  friend Count operator*(long k, Count a) { return {k * a.constant, k * a.n_coeff}; }
  friend bool operator==(const Count&, const Count&) = default;
};

enum class BasisKind { Unit, L, H1M, W1, W2 };

// Basis motive with its Lefschetz twist: L^k, h1(M) (x) L^k, W1 (x) L^k.
struct MotiveKey {
  BasisKind kind = BasisKind::Unit;
  int twist = 0;

  // Cohomological degree of the only nonzero cohomology group.
  int degree() const;
  // Codimensions j with CH^j of this motive possibly nonzero.
  std::vector<int> chow_degrees() const;
  std::string to_string() const;
  friend auto operator<=>(const MotiveKey&, const MotiveKey&) = default;
};

struct Motive {
  std::string variety;  // "surface" or "threefold"
  int dimension = 2;
  int level = 3;
  std::map<MotiveKey, Count> parts;

  std::string to_string() const;
};

Motive decompose_surface(int level);
Motive decompose_threefold(int level);

// Surface multiplicity of L from the assembly, the closed form (N-1)c it is
// compared against, and the NS-rank cross-check.
struct SurfaceMultiplicity {
  long assembly = 0;
  long closed_form = 0;
  long ns_rank = 0;
  long from_betti = 0;  // b2 - 2 s3 with b2 from the Euler number
  long discrepancy() const { return assembly - closed_form; }
};
SurfaceMultiplicity surface_multiplicity(int level);

struct BettiTable {
  std::vector<Count> b;                             // b_0 .. b_2d
  std::vector<std::vector<std::string>> attribution;  // constituents per degree
  Count euler() const;
  bool poincare_symmetric() const;
};

// Throws SymbolicMultiplicity when numeric is set and the motive involves n
// without a value.
BettiTable realize_betti(const Motive& m, bool numeric = false, std::optional<long> n_value = std::nullopt);

struct CkRow {
  int degree = 0;
  std::vector<std::pair<Count, MotiveKey>> constituents;
  std::string to_string() const;
};
std::vector<CkRow> chow_kunneth_table(const Motive& m);

struct GradedPiece {
  int nu = 0;
  std::string step;                // name of F^nu
  int from_degree = 0;             // h^{2j - nu}
  std::vector<std::string> pieces;  // empty means zero
  std::string to_string() const;
};

struct FiltrationRow {
  int codim = 0;
  int steps = 0;  // number of inclusions F^0 > F^1 > ... > F^j
  std::vector<GradedPiece> graded;
};

struct FiltrationTable {
  std::string variety;
  int level = 3;
  std::vector<FiltrationRow> rows;
  bool vanishing_ok = false;  // j <= i <= 2j for every constituent of h^i with CH^j != 0
  std::vector<std::pair<std::string, bool>> ch1_checklist;
};

FiltrationTable filtration_table(const Motive& m);

}  // namespace motive
