#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contests/contest_spec.hpp"
#include "contests/payoff.hpp"

namespace contests {

/// Symmetric interior equilibrium effort of the unconstrained contest,
/// where the marginal value of effort at a symmetric profile equals its
/// cost: v * f'(e) / (4 f(e)) = 1. For the scaled-power family the scale
/// cancels and the root is r * v / 4 in closed form.
inline double unconstrained_equilibrium(Valuation v, const ImpactFunction& f) {
  return f.exponent() * v.v / 4.0;
}

/// Same root found numerically from the first-order condition, used to
/// cross-check the closed form rather than replace it. Bisection works
/// because v * f'(e) / (4 f(e)) - 1 is strictly decreasing in e.
inline double unconstrained_equilibrium_bisect(Valuation v, const ImpactFunction& f,
                                               double tol = 1e-12) {
  const auto residual = [&](double e) {
    return v.v * f.derivative(e) / (4.0 * f(e)) - 1.0;
  };
  double lo = 1e-12;
  double hi = v.v;
  if (residual(lo) <= 0.0) return lo;
  double rhi = residual(hi);
  while (rhi > 0.0) {  // cannot trigger for r <= 1, kept for safety
    hi *= 2.0;
    rhi = residual(hi);
  }
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double rm = residual(mid);
    if (rm == 0.0) return mid;
    (rm > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

enum class BracketKind { Interior, Straddling, AllBelow, AllAbove };

/// Nearest feasible efforts around the unconstrained optimum e_star.
/// Interior means e_star itself is feasible (lower == upper == e_star).
/// AllBelow / AllAbove mark choice sets entirely on one side; lower and
/// upper then both hold the nearest feasible effort.
struct Bracket {
  BracketKind kind = BracketKind::Interior;
  double lower = 0.0;
  double upper = 0.0;

  bool interior() const { return kind == BracketKind::Interior; }
};

inline Bracket bracket_around(const ChoiceSet& s, double e_star) {
  if (s.contains(e_star)) {
    return {BracketKind::Interior, e_star, e_star};
  }
  bool has_below = false;
  bool has_above = false;
  double below = 0.0;
  double above = 0.0;
  for (const Segment& seg : s.segments()) {
    if (seg.hi < e_star) {
      below = seg.hi;  // segments are increasing, last one below wins
      has_below = true;
    }
    if (seg.lo > e_star && !has_above) {
      above = seg.lo;
      has_above = true;
    }
  }
  if (has_below && has_above) return {BracketKind::Straddling, below, above};
  if (has_below) return {BracketKind::AllBelow, below, below};
  return {BracketKind::AllAbove, above, above};
}

/// Effort level at which matching the rival (and splitting the prize) is
/// exactly as good as conceding the high ground: solves
///   v/2 - e = p(e_high, e) * v - e_high  on [0, e_star].
/// Exists precisely when e_high <= v/2; returns nullopt beyond that.
/// Bisection to absolute tolerance tol, capped at 200 iterations. Requires
/// e_high >= e_star.
inline std::optional<double> threshold_effort(Valuation v, const ImpactFunction& f,
                                              double e_high, double tol = 1e-12) {
  const double e_star = unconstrained_equilibrium(v, f);
  if (e_high < e_star - 1e-12 * std::max(1.0, v.v)) {
    throw std::invalid_argument("threshold requires e_high at or above the unconstrained optimum");
  }
  const double half = 0.5 * v.v;
  if (e_high > half) return std::nullopt;
  if (e_high == half) return 0.0;

  const auto gap = [&](double e) {
    return (half - e) - (expected_payoff(v, f, e_high, e));
  };
  // gap(0) = e_high - v/2 <= 0 and gap(e_star) >= 0, with a single crossing.
  double lo = 0.0;
  double hi = e_star;
  const double ghi = gap(hi);
  if (ghi == 0.0) return hi;
  const double glo = gap(lo);
  if (glo == 0.0) return lo;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = gap(mid);
    if (gm == 0.0) return mid;
    (gm < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Which of the two bracket efforts dominates the restricted game over
/// {e_low, e_high}. The payoff-difference identity makes the comparison
/// independent of what the rival picks, so a dominant strategy always
/// exists; "either" marks the knife-edge where both differences vanish and
/// each effort is weakly dominant.
struct DominantStrategy2x2 {
  double effort = 0.0;
  bool weak = false;
  bool either = false;
};

inline DominantStrategy2x2 dominant_strategy_2x2(Valuation v, const ImpactFunction& f,
                                                 double e_low, double e_high,
                                                 double tie_tol = -1.0) {
  if (!(e_low < e_high)) {
    throw std::invalid_argument("dominance comparison needs e_low < e_high");
  }
  if (tie_tol < 0.0) tie_tol = 1e-9 * std::max(1.0, v.v);
  const double d_vs_low =
      expected_payoff(v, f, e_low, e_low) - expected_payoff(v, f, e_high, e_low);
  const double d_vs_high =
      expected_payoff(v, f, e_low, e_high) - expected_payoff(v, f, e_high, e_high);
  const bool zero_low = std::abs(d_vs_low) <= tie_tol;
  const bool zero_high = std::abs(d_vs_high) <= tie_tol;
  if (zero_low && zero_high) return {e_low, true, true};
  const double d = zero_low ? d_vs_high : d_vs_low;
  return {d > 0.0 ? e_low : e_high, zero_low || zero_high, false};
}

enum class EquilibriumCase { Interior, CaseA, CaseB, CaseC, OneSidedLow, OneSidedHigh };

inline const char* to_string(EquilibriumCase c) {
  switch (c) {
    case EquilibriumCase::Interior: return "Interior";
    case EquilibriumCase::CaseA: return "CaseA";
    case EquilibriumCase::CaseB: return "CaseB";
    case EquilibriumCase::CaseC: return "CaseC";
    case EquilibriumCase::OneSidedLow: return "OneSidedLow";
    case EquilibriumCase::OneSidedHigh: return "OneSidedHigh";
  }
  throw std::logic_error("unreachable equilibrium case");
}

inline EquilibriumCase equilibrium_case_from_string(const std::string& s) {
  if (s == "Interior") return EquilibriumCase::Interior;
  if (s == "CaseA") return EquilibriumCase::CaseA;
  if (s == "CaseB") return EquilibriumCase::CaseB;
  if (s == "CaseC") return EquilibriumCase::CaseC;
  if (s == "OneSidedLow") return EquilibriumCase::OneSidedLow;
  if (s == "OneSidedHigh") return EquilibriumCase::OneSidedHigh;
  throw std::invalid_argument("unknown equilibrium case: " + s);
}

/// Full outcome of the symmetric analysis. equilibria lists pure profiles
/// in a fixed order; rent_dissipation is total equilibrium effort over the
/// prize for the first listed profile.
struct EquilibriumReport {
  double e_star = 0.0;
  Bracket bracket;
  std::optional<double> threshold;
  EquilibriumCase eq_case = EquilibriumCase::Interior;
  std::vector<EffortPair> equilibria;
  std::optional<DominantStrategy2x2> dominant_2x2;
  double rent_dissipation = 0.0;
  std::vector<std::string> diagnostics;
};

/// Classifies the symmetric constrained contest.
///
/// Interior: the unconstrained optimum is feasible and both players play it.
/// CaseA: both play the lower bracket effort (upper too expensive, or the
/// indifference threshold falls below the lower effort).
/// CaseB: both play the upper bracket effort.
/// CaseC: threshold and lower effort coincide within the knife-edge band;
/// all four pairings over the bracket are equilibria.
/// OneSidedLow / OneSidedHigh: the set misses the optimum on one side and
/// the nearest feasible effort is played by both.
inline EquilibriumReport classify(const ContestSpec& spec,
                                  const SolverTolerances& tol = {}) {
  if (!spec.choice_set.has_value()) {
    throw std::invalid_argument("classify needs a shared choice set");
  }
  if (!spec.symmetric_valuations()) {
    throw std::invalid_argument(
        "classify handles equal valuations only; build the finite game for asymmetric players");
  }
  const Valuation v = spec.v1;
  const ImpactFunction& f = spec.impact;
  const ChoiceSet& s = *spec.choice_set;

  EquilibriumReport rep;
  rep.e_star = unconstrained_equilibrium(v, f);
  rep.bracket = bracket_around(s, rep.e_star);

  switch (rep.bracket.kind) {
    case BracketKind::Interior: {
      rep.eq_case = EquilibriumCase::Interior;
      rep.equilibria = {{rep.e_star, rep.e_star}};
      break;
    }
    case BracketKind::AllBelow: {
      rep.eq_case = EquilibriumCase::OneSidedLow;
      const double m = rep.bracket.lower;
      rep.equilibria = {{m, m}};
      rep.diagnostics.push_back(
          "choice set lies entirely below the unconstrained optimum; the largest feasible "
          "effort is played by both (one-sided extension, oracle-checked)");
      break;
    }
    case BracketKind::AllAbove: {
      rep.eq_case = EquilibriumCase::OneSidedHigh;
      const double m = rep.bracket.upper;
      rep.equilibria = {{m, m}};
      rep.diagnostics.push_back(
          "choice set lies entirely above the unconstrained optimum; the smallest feasible "
          "effort is played by both (one-sided extension, oracle-checked)");
      break;
    }
    case BracketKind::Straddling: {
      const double e_low = rep.bracket.lower;
      const double e_high = rep.bracket.upper;
      rep.dominant_2x2 = dominant_strategy_2x2(v, f, e_low, e_high);
      rep.threshold = threshold_effort(v, f, e_high, tol.root);
      if (!rep.threshold.has_value()) {
        rep.eq_case = EquilibriumCase::CaseA;
        rep.equilibria = {{e_low, e_low}};
        rep.diagnostics.push_back(
            "no threshold: the upper bracket effort exceeds half the prize, so it can never "
            "pay for itself");
        break;
      }
      const double e_hat = *rep.threshold;
      if (e_hat < e_low - tol.knife_edge) {
        rep.eq_case = EquilibriumCase::CaseA;
        rep.equilibria = {{e_low, e_low}};
      } else if (e_hat > e_low + tol.knife_edge) {
        rep.eq_case = EquilibriumCase::CaseB;
        rep.equilibria = {{e_high, e_high}};
      } else {
        rep.eq_case = EquilibriumCase::CaseC;
        rep.equilibria = {{e_low, e_low}, {e_low, e_high}, {e_high, e_low}, {e_high, e_high}};
        rep.diagnostics.push_back(
            "knife-edge: the threshold coincides with the lower bracket effort, every pairing "
            "over the bracket is an equilibrium, and the outcome flips under tiny "
            "perturbations of the choice set");
        rep.diagnostics.push_back("rent_dissipation refers to the first listed equilibrium");
      }
      break;
    }
  }

  const EffortPair& first = rep.equilibria.front();
  rep.rent_dissipation = (first.e1 + first.e2) / v.v;
  return rep;
}

/// One row of a what-if sweep over hypothetical upper bracket efforts at a
/// fixed lower effort. Rows beyond v/2 carry no threshold and classify as
/// CaseA.
struct ThresholdSweepRow {
  double e_high = 0.0;
  std::optional<double> e_hat;
  EquilibriumCase eq_case = EquilibriumCase::CaseA;
};

inline std::vector<ThresholdSweepRow> sweep_threshold(
    Valuation v, const ImpactFunction& f, double e_low, double from, double to, int steps,
    const SolverTolerances& tol = {}) {
  if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
  if (!(from <= to)) throw std::invalid_argument("sweep range must satisfy from <= to");
  const double e_star = unconstrained_equilibrium(v, f);
  if (from < e_star - 1e-12 * std::max(1.0, v.v)) {
    throw std::invalid_argument("sweep range must start at or above the unconstrained optimum");
  }
  std::vector<ThresholdSweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double e_high = from + static_cast<double>(k) * (to - from) / (steps - 1);
    ThresholdSweepRow row;
    row.e_high = e_high;
    row.e_hat = threshold_effort(v, f, std::max(e_high, e_star), tol.root);
    if (!row.e_hat.has_value()) {
      row.eq_case = EquilibriumCase::CaseA;
    } else if (*row.e_hat < e_low - tol.knife_edge) {
      row.eq_case = EquilibriumCase::CaseA;
    } else if (*row.e_hat > e_low + tol.knife_edge) {
      row.eq_case = EquilibriumCase::CaseB;
    } else {
      row.eq_case = EquilibriumCase::CaseC;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace contests
