#include "demonic/thermo.hpp"

#include <cmath>

namespace demonic {

double binary_entropy(const Rat& p) {
  if (p < Rat(0) || p > Rat(1)) {
    throw Error("binary_entropy: probability " + to_string(p) + " outside [0, 1]");
  }
  if (p == Rat(0) || p == Rat(1)) return 0.0;
  const double x = to_double(p);
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

PhiReport phi(const Dist& d) {
  PhiReport r;
  r.mean_w = mean_work(d);

  // X only takes lattice values, so per-branch entropy is 0 or 1 and the
  // average stays an exact dyadic rational.
  Rat branch(0);
  for (const auto& [state, p] : d.entries()) {
    if (state.x == ParticleProb::half) branch += p;
  }
  r.mean_branch_entropy = to_double(branch);
  r.ensemble_entropy = binary_entropy(mean_x(d));
  r.sigma = (r.mean_branch_entropy + r.ensemble_entropy) / 2.0;
  r.phi = to_double(r.mean_w) - r.sigma;
  return r;
}

Rat w_zero(const Dist& d0) {
  Rat branch(0);
  for (const auto& [state, p] : d0.entries()) {
    if (state.x == ParticleProb::half) branch += p;
  }
  const Rat mx = mean_x(d0);
  Rat ensemble;
  if (mx == Rat(0) || mx == Rat(1)) {
    ensemble = Rat(0);
  } else if (mx == Rat(1, 2)) {
    ensemble = Rat(1);
  } else {
    throw Error("w_zero: h(<X>) is irrational for <X> = " + to_string(mx) +
                "; use phi(d).sigma for the float value");
  }
  return (branch + ensemble) / 2;
}

}  // namespace demonic
