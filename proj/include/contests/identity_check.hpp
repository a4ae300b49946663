#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "contests/payoff.hpp"
#include "contests/random.hpp"

namespace contests {

struct IdentityCheckResult {
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int samples = 0;
  std::uint64_t seed = 0;
};

/// Monte-Carlo sweep of the payoff-difference identity at fixed prize and
/// impact: draws effort pairs on [0, 2v] and tracks the worst residual.
/// The identity is algebraic, so anything beyond rounding noise is a bug.
inline IdentityCheckResult identity_check(Valuation v, const ImpactFunction& f, int samples,
                                          std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("identity check needs at least one sample");
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double x = rng.uniform(0.0, 2.0 * v.v);
    const double y = rng.uniform(0.0, 2.0 * v.v);
    worst = std::max(worst, std::abs(payoff_identity_residual(v, f, x, y)));
  }
  IdentityCheckResult res;
  res.max_residual = worst;
  res.tolerance = 1e-9 * std::max(1.0, v.v);
  res.pass = worst <= res.tolerance;
  res.samples = samples;
  res.seed = seed;
  return res;
}

}  // namespace contests
