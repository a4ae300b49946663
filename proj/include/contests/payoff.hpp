#pragma once

#include "contests/impact.hpp"
#include "contests/types.hpp"

namespace contests {

/// Probability that the first argument wins a logit contest:
/// f(e_i) / (f(e_i) + f(e_j)), with the stand-off value 1/2 when both
/// impacts are zero. That branch is a definition, not a limit, and it is
/// taken exactly so that (0, 0) payoffs are reproducible.
inline double win_probability(const ImpactFunction& f, double e_i, double e_j) {
  const double fi = f(e_i);
  const double fj = f(e_j);
  if (fi == 0.0 && fj == 0.0) return 0.5;
  return fi / (fi + fj);
}

/// Expected payoff of the player exerting own_effort against rival_effort:
/// win probability times the prize, minus own effort.
inline double expected_payoff(Valuation v, const ImpactFunction& f,
                              double own_effort, double rival_effort) {
  return win_probability(f, own_effort, rival_effort) * v.v - own_effort;
}

/// Residual of the payoff-difference identity
///   [E(x,y) - E(y,y)] - [E(x,x) - E(y,x)],
/// which is zero for every x, y in exact arithmetic. Both differences
/// measure the gain of switching from y to x, one against a rival at y and
/// one against a rival at x; that they coincide is what lets a two-point
/// restricted game be settled by a single comparison.
inline double payoff_identity_residual(Valuation v, const ImpactFunction& f,
                                       double x, double y) {
  const double lhs = expected_payoff(v, f, x, y) - expected_payoff(v, f, y, y);
  const double rhs = expected_payoff(v, f, x, x) - expected_payoff(v, f, y, x);
  return lhs - rhs;
}

}  // namespace contests
