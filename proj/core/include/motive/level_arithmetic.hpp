#pragma once

#include <cstdint>

namespace motive {

struct LevelInvariants {
  long level = 0;
  long cusp_count = 0;
  long euler_index = 0;  // mu = N * cusp_count, the Euler number of the surface
  long genus = 0;
  long s3 = 0;  // weight-3 cusp forms
  long s4 = 0;  // weight-4 cusp forms

  friend bool operator==(const LevelInvariants&, const LevelInvariants&) = default;
};

// c = N^2/2 * prod_{p | N} (1 - p^-2). Throws LevelTooSmall for N < 3.
long cusp_count(long level);

// Genus and cusp-form dimensions use the classical formulas for the full
// level-N subgroup, N >= 3 (torsion free, every cusp regular):
//   g = 1 + mu (N - 6) / (12 N),  dim S_k = (k - 1)(g - 1) + (k - 2) c / 2.
LevelInvariants level_invariants(long level);

long cusp_form_dimension(const LevelInvariants& inv, long weight);

// Multiplicity m(2, q, r) of Sym^r in the degree-q cohomology of the square
// of an elliptic curve. Arguments outside the convention give 0.
long local_multiplicity(long q, long r);

long binomial(long n, long k);

}  // namespace motive
