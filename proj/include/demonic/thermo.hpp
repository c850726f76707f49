#pragma once

#include "demonic/dist.hpp"
#include "demonic/rational.hpp"

namespace demonic {

// Float-side comparisons throughout the project use this tolerance; the
// rational side is always compared exactly.
inline constexpr double kEpsilon = 1e-9;

// Binary entropy in units of k ln2, with the convention 0*log2(0) = 0.
// Throws Error for p outside [0, 1].
double binary_entropy(const Rat& p);

// The invariant ledger for one distribution. mean_w is exact; the entropy
// side is transcendental in general and kept as doubles.
struct PhiReport {
  Rat mean_w;                   // <w>
  double mean_branch_entropy;   // <h(X)>
  double ensemble_entropy;      // h(<X>)
  double sigma;                 // (mean_branch_entropy + ensemble_entropy) / 2
  double phi;                   // <w> - sigma; the second law demands phi <= 0
};

PhiReport phi(const Dist& d);

// Work-counter zero point: Sigma(X0) in k ln2 units. Exact whenever <X0>
// lies on the lattice {0, 1/2, 1}, where h(<X0>) is 0 or 1; for any other
// mixture the true value is irrational and this throws Error (phi().sigma
// carries the float value in that case).
Rat w_zero(const Dist& d0);

}  // namespace demonic
