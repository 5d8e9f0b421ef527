#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "motive/exact_math.hpp"

namespace motive {

enum class ComponentType { ProperTransform, Quadric };

// One irreducible component of a cusp fibre of the fibre-square model.
// Proper transforms are indexed by (m, n), quadrics by (m + 1/2, n + 1/2).
struct Component {
  ComponentType type = ComponentType::ProperTransform;
  int m = 0;
  int n = 0;
  long euler = 0;
  long multiplicity = 1;
  std::string label() const;
};

// Intersection curve of components a and b with its self-intersection
// inside each of them.
struct Curve {
  std::size_t a = 0;
  std::size_t b = 0;
  long euler = 2;
  long self_in_a = 0;
  long self_in_b = 0;
};

struct TriplePoint {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
};

struct IncidenceComplex {
  int level = 3;
  std::vector<Component> components;
  std::vector<Curve> curves;
  std::vector<TriplePoint> triple_points;

  std::size_t index_of(ComponentType t, int m, int n) const;
  // Proper transforms meeting a quadric.
  std::vector<std::size_t> neighbours(std::size_t component) const;
};

// Stratified model of one cusp fibre. Assumes proper transforms indexed by
// (m, n) and (m + 1, n + 1) are disjoint.
IncidenceComplex cusp_incidence(int level);

// Inclusion-exclusion over the strata.
long euler_fiber(const IncidenceComplex& x);
long euler_fiber(int level);

// Rows: components; columns: curves; entry D . C.
RatMatrix component_curve_matrix(const IncidenceComplex& x);
// sum_i mult_i (D_i . C) for every curve; all zero when the model is consistent.
std::vector<long> fibre_degree_on_curves(const IncidenceComplex& x);
std::size_t vertical_lattice_rank(const IncidenceComplex& x);

struct NEstimate {
  int level = 3;
  long euler_fiber = 0;
  std::size_t lattice_rank_per_cusp = 0;
  long n_euler = 0;
  long n_lattice = 0;
  bool consistent = false;
  bool experimental = true;
};

// Two independent routes to the multiplicity of L in the threefold motive.
NEstimate estimate_n(int level);

}  // namespace motive
