#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "contests/contest_spec.hpp"
#include "contests/payoff.hpp"
#include "contests/solver.hpp"

namespace contests {

/// Finite sample of a choice set: every segment endpoint exactly, interior
/// points spaced at most `step` apart, strictly increasing.
struct Grid {
  std::vector<double> points;
  double step = 0.0;

  static Grid from_points(std::vector<double> pts) { return {std::move(pts), 0.0}; }
};

inline Grid discretize(const ChoiceSet& s, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("grid step must be positive and finite");
  }
  Grid grid;
  grid.step = h;
  for (const Segment& seg : s.segments()) {
    if (seg.is_point()) {
      grid.points.push_back(seg.lo);
      continue;
    }
    const double width = seg.hi - seg.lo;
    const auto intervals = static_cast<std::size_t>(std::ceil(width / h));
    if (intervals > 5'000'000 || grid.points.size() + intervals > 5'000'000) {
      throw std::invalid_argument("grid step too small for this choice set");
    }
    for (std::size_t k = 0; k <= intervals; ++k) {
      grid.points.push_back(k == intervals
                                ? seg.hi
                                : seg.lo + static_cast<double>(k) * width /
                                               static_cast<double>(intervals));
    }
  }
  return grid;
}

struct GridCell {
  std::size_t i = 0;
  std::size_t j = 0;
  double e1 = 0.0;
  double e2 = 0.0;
};

namespace detail {

struct PayoffView {
  const std::vector<double>& g1;
  const std::vector<double>& g2;
  std::vector<double> imp1;
  std::vector<double> imp2;
  double v1;
  double v2;

  PayoffView(Valuation val1, Valuation val2, const ImpactFunction& f,
             const Grid& grid1, const Grid& grid2)
      : g1(grid1.points), g2(grid2.points), v1(val1.v), v2(val2.v) {
    imp1.reserve(g1.size());
    imp2.reserve(g2.size());
    for (double e : g1) imp1.push_back(f(e));
    for (double e : g2) imp2.push_back(f(e));
  }

  double payoff_1(std::size_t i, std::size_t j) const {
    const double fi = imp1[i];
    const double fj = imp2[j];
    const double p = (fi == 0.0 && fj == 0.0) ? 0.5 : fi / (fi + fj);
    return p * v1 - g1[i];
  }

  double payoff_2(std::size_t i, std::size_t j) const {
    const double fi = imp1[i];
    const double fj = imp2[j];
    const double p = (fi == 0.0 && fj == 0.0) ? 0.5 : fj / (fi + fj);
    return p * v2 - g2[j];
  }

  std::vector<double> column_best_1() const {
    std::vector<double> best(g2.size(), -std::numeric_limits<double>::infinity());
    for (std::size_t j = 0; j < g2.size(); ++j) {
      for (std::size_t i = 0; i < g1.size(); ++i) {
        best[j] = std::max(best[j], payoff_1(i, j));
      }
    }
    return best;
  }

  std::vector<double> row_best_2() const {
    std::vector<double> best(g1.size(), -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < g1.size(); ++i) {
      for (std::size_t j = 0; j < g2.size(); ++j) {
        best[i] = std::max(best[i], payoff_2(i, j));
      }
    }
    return best;
  }
};

inline std::size_t nearest_index(const std::vector<double>& pts, double x) {
  std::size_t arg = 0;
  double best = std::abs(pts[0] - x);
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double d = std::abs(pts[k] - x);
    if (d < best) {
      best = d;
      arg = k;
    }
  }
  return arg;
}

}  // namespace detail

/// Exhaustive scan for profiles where neither player can gain more than eps
/// by any deviation within their grid. Quadratic in grid size; impacts are
/// precomputed so each cell costs a few flops.
inline std::vector<GridCell> epsilon_nash_enumerate(Valuation v1, Valuation v2,
                                                    const ImpactFunction& f, const Grid& g1,
                                                    const Grid& g2, double eps) {
  if (g1.points.empty() || g2.points.empty()) {
    throw std::invalid_argument("grids must be nonempty");
  }
  if (eps < 0.0) throw std::invalid_argument("eps must be nonnegative");
  const detail::PayoffView view(v1, v2, f, g1, g2);
  const std::vector<double> col_best = view.column_best_1();
  const std::vector<double> row_best = view.row_best_2();
  std::vector<GridCell> cells;
  for (std::size_t i = 0; i < g1.points.size(); ++i) {
    for (std::size_t j = 0; j < g2.points.size(); ++j) {
      if (view.payoff_1(i, j) >= col_best[j] - eps &&
          view.payoff_2(i, j) >= row_best[i] - eps) {
        cells.push_back({i, j, g1.points[i], g2.points[j]});
      }
    }
  }
  return cells;
}

/// Index of the best reply to rival_effort within `own`, lowest index on ties.
inline std::size_t grid_best_response(Valuation v, const ImpactFunction& f, const Grid& own,
                                      double rival_effort) {
  if (own.points.empty()) throw std::invalid_argument("grid must be nonempty");
  std::size_t arg = 0;
  double best = expected_payoff(v, f, own.points[0], rival_effort);
  for (std::size_t i = 1; i < own.points.size(); ++i) {
    const double u = expected_payoff(v, f, own.points[i], rival_effort);
    if (u > best) {
      best = u;
      arg = i;
    }
  }
  return arg;
}

/// Outcome of cross-checking predicted equilibria against brute force.
/// confirmed holds exactly when both lists are empty.
struct OracleVerdict {
  bool confirmed = false;
  std::vector<EffortPair> predicted_missing;
  std::vector<EffortPair> extra_found;
  double h = 0.0;
  double eps = 0.0;
  double delta = 0.0;
};

/// Core comparison used by both verification entry points.
///
/// Each prediction is snapped to the nearest grid cell (within delta per
/// coordinate) and must survive an eps-deviation check there; eps is
/// deliberately generous so a true equilibrium sitting between grid points
/// is not rejected. The scan for unpredicted equilibria runs the
/// enumeration at tie level instead: near a flat payoff peak the
/// eps-relaxed set is legitimately wide, so using eps there would flag
/// whole neighborhoods that refute nothing. Restricted to the grid, the
/// game is itself a finite contest, so its exact equilibria sit within one
/// step of the predicted ones whenever the prediction is right, and the
/// tie-level scan makes the comparison sharp.
inline OracleVerdict verify_cells(const std::vector<EffortPair>& predicted, Valuation v1,
                                  Valuation v2, const ImpactFunction& f, const Grid& g1,
                                  const Grid& g2, double eps, double strict_eps, double delta,
                                  double h) {
  const detail::PayoffView view(v1, v2, f, g1, g2);
  const std::vector<double> col_best = view.column_best_1();
  const std::vector<double> row_best = view.row_best_2();

  OracleVerdict verdict;
  verdict.h = h;
  verdict.eps = eps;
  verdict.delta = delta;

  for (const EffortPair& pair : predicted) {
    const std::size_t i = detail::nearest_index(g1.points, pair.e1);
    const std::size_t j = detail::nearest_index(g2.points, pair.e2);
    const bool snapped = std::abs(g1.points[i] - pair.e1) <= delta &&
                         std::abs(g2.points[j] - pair.e2) <= delta;
    const bool holds = snapped && view.payoff_1(i, j) >= col_best[j] - eps &&
                       view.payoff_2(i, j) >= row_best[i] - eps;
    if (!holds) verdict.predicted_missing.push_back(pair);
  }

  for (std::size_t i = 0; i < g1.points.size(); ++i) {
    for (std::size_t j = 0; j < g2.points.size(); ++j) {
      if (view.payoff_1(i, j) < col_best[j] - strict_eps ||
          view.payoff_2(i, j) < row_best[i] - strict_eps) {
        continue;
      }
      bool matched = false;
      for (const EffortPair& pair : predicted) {
        if (std::abs(g1.points[i] - pair.e1) <= delta &&
            std::abs(g2.points[j] - pair.e2) <= delta) {
          matched = true;
          break;
        }
      }
      if (!matched) verdict.extra_found.push_back({g1.points[i], g2.points[j]});
    }
  }

  verdict.confirmed = verdict.predicted_missing.empty() && verdict.extra_found.empty();
  return verdict;
}

/// Brute-force check of a symmetric classification on a fresh grid.
inline OracleVerdict verify_report(const EquilibriumReport& report, const ContestSpec& spec,
                                   double h = 1e-3, double eps = 2e-3, double delta = -1.0) {
  if (!spec.choice_set.has_value()) {
    throw std::invalid_argument("verification of a classification needs a shared choice set");
  }
  if (delta < 0.0) delta = 2.0 * h;
  const Grid grid = discretize(*spec.choice_set, h);
  const double strict_eps = 1e-9 * std::max(1.0, std::max(spec.v1.v, spec.v2.v));
  return verify_cells(report.equilibria, spec.v1, spec.v2, spec.impact, grid, grid, eps,
                      strict_eps, delta, h);
}

/// Brute-force check of predicted pure cells in a finite game. Matching is
/// exact (delta 0): predictions come from the same strategy lists.
inline OracleVerdict verify_pure_cells(const std::vector<EffortPair>& predicted, Valuation v1,
                                       Valuation v2, const ImpactFunction& f,
                                       const std::vector<double>& efforts_1,
                                       const std::vector<double>& efforts_2,
                                       double strict_eps = -1.0) {
  if (strict_eps < 0.0) strict_eps = 1e-9 * std::max(1.0, std::max(v1.v, v2.v));
  const Grid g1 = Grid::from_points(efforts_1);
  const Grid g2 = Grid::from_points(efforts_2);
  return verify_cells(predicted, v1, v2, f, g1, g2, strict_eps, strict_eps, 0.0, 0.0);
}

}  // namespace contests
