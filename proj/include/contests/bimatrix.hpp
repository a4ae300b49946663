#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "contests/payoff.hpp"

namespace contests {

/// Finite two-player contest in normal form. Rows index player 1's effort,
/// columns player 2's; payoff_1[i][j] / payoff_2[i][j] are the players'
/// expected payoffs in cell (i, j).
struct Bimatrix {
  std::vector<double> efforts_1;
  std::vector<double> efforts_2;
  std::vector<std::vector<double>> payoff_1;
  std::vector<std::vector<double>> payoff_2;

  std::size_t rows() const { return efforts_1.size(); }
  std::size_t cols() const { return efforts_2.size(); }
};

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

inline Bimatrix build_bimatrix(Valuation v1, Valuation v2, const ImpactFunction& f,
                               const std::vector<double>& efforts_1,
                               const std::vector<double>& efforts_2) {
  if (efforts_1.empty() || efforts_2.empty()) {
    throw std::invalid_argument("both players need at least one effort level");
  }
  Bimatrix bm;
  bm.efforts_1 = efforts_1;
  bm.efforts_2 = efforts_2;
  bm.payoff_1.assign(efforts_1.size(), std::vector<double>(efforts_2.size()));
  bm.payoff_2.assign(efforts_1.size(), std::vector<double>(efforts_2.size()));
  for (std::size_t i = 0; i < efforts_1.size(); ++i) {
    for (std::size_t j = 0; j < efforts_2.size(); ++j) {
      bm.payoff_1[i][j] = expected_payoff(v1, f, efforts_1[i], efforts_2[j]);
      bm.payoff_2[i][j] = expected_payoff(v2, f, efforts_2[j], efforts_1[i]);
    }
  }
  return bm;
}

/// All cells where neither player can strictly improve by a unilateral
/// deviation; payoffs within tie_tol of the best reply count as best.
/// Row-major order.
inline std::vector<Cell> pure_nash(const Bimatrix& bm, double tie_tol = 1e-12) {
  const std::size_t n = bm.rows();
  const std::size_t m = bm.cols();
  std::vector<double> col_best(m, -std::numeric_limits<double>::infinity());
  std::vector<double> row_best(n, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      col_best[j] = std::max(col_best[j], bm.payoff_1[i][j]);
      row_best[i] = std::max(row_best[i], bm.payoff_2[i][j]);
    }
  }
  std::vector<Cell> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (bm.payoff_1[i][j] >= col_best[j] - tie_tol &&
          bm.payoff_2[i][j] >= row_best[i] - tie_tol) {
        out.push_back({i, j});
      }
    }
  }
  return out;
}

/// One pairwise dominance fact: for `player`, the strategy at index
/// `dominating` is never worse than `dominated` and strictly better at
/// least once; strict means strictly better everywhere.
struct DominanceRelation {
  int player = 1;
  std::size_t dominating = 0;
  std::size_t dominated = 0;
  bool strict = false;

  friend bool operator==(const DominanceRelation&, const DominanceRelation&) = default;
};

inline std::vector<DominanceRelation> dominance(const Bimatrix& bm, double tie_tol = 1e-12) {
  std::vector<DominanceRelation> out;
  const std::size_t n = bm.rows();
  const std::size_t m = bm.cols();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      bool never_worse = true;
      bool strictly_better_once = false;
      bool strictly_better_all = true;
      for (std::size_t j = 0; j < m; ++j) {
        const double d = bm.payoff_1[a][j] - bm.payoff_1[b][j];
        if (d < -tie_tol) never_worse = false;
        if (d > tie_tol) strictly_better_once = true;
        if (d <= tie_tol) strictly_better_all = false;
      }
      if (never_worse && strictly_better_once) {
        out.push_back({1, a, b, strictly_better_all});
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      bool never_worse = true;
      bool strictly_better_once = false;
      bool strictly_better_all = true;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = bm.payoff_2[i][a] - bm.payoff_2[i][b];
        if (d < -tie_tol) never_worse = false;
        if (d > tie_tol) strictly_better_once = true;
        if (d <= tie_tol) strictly_better_all = false;
      }
      if (never_worse && strictly_better_once) {
        out.push_back({2, a, b, strictly_better_all});
      }
    }
  }
  return out;
}

/// Mixed profile with supports of size 1 or 2 per player, probabilities in
/// support order. Size-1 supports are pure profiles.
struct MixedEquilibrium {
  std::vector<std::size_t> support_1;
  std::vector<double> probs_1;
  std::vector<std::size_t> support_2;
  std::vector<double> probs_2;
};

/// Largest unilateral gain either player can get against the profile; zero
/// (up to tolerance) certifies an equilibrium. Used both by the solver and
/// as an independent recheck in tests.
inline double mixed_deviation_gap(const Bimatrix& bm, const MixedEquilibrium& eq) {
  const std::size_t n = bm.rows();
  const std::size_t m = bm.cols();
  std::vector<double> x(n, 0.0), y(m, 0.0);
  for (std::size_t k = 0; k < eq.support_1.size(); ++k) x[eq.support_1[k]] = eq.probs_1[k];
  for (std::size_t k = 0; k < eq.support_2.size(); ++k) y[eq.support_2[k]] = eq.probs_2[k];

  double u1 = 0.0, u2 = 0.0;
  double best1 = -std::numeric_limits<double>::infinity();
  double best2 = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double row_value = 0.0;
    for (std::size_t j = 0; j < m; ++j) row_value += bm.payoff_1[i][j] * y[j];
    best1 = std::max(best1, row_value);
    u1 += x[i] * row_value;
  }
  for (std::size_t j = 0; j < m; ++j) {
    double col_value = 0.0;
    for (std::size_t i = 0; i < n; ++i) col_value += bm.payoff_2[i][j] * x[i];
    best2 = std::max(best2, col_value);
    u2 += y[j] * col_value;
  }
  return std::max(best1 - u1, best2 - u2);
}

struct MixedSearchResult {
  std::vector<MixedEquilibrium> equilibria;
  bool continuum = false;
};

/// Support enumeration capped at two strategies per player (more than two
/// can never be mixed over in these contests). Size-1 supports are pure
/// best-reply checks; size-2 supports solve the two-equation indifference
/// system and keep solutions with valid probabilities and no profitable
/// pure deviation. A singular system whose payoff differences all vanish
/// marks a degenerate continuum: every mixture over those supports is an
/// equilibrium, reported once via the flag plus a midpoint representative.
inline MixedSearchResult mixed_two_support(const Bimatrix& bm, double tol = 1e-10) {
  MixedSearchResult result;
  const std::size_t n = bm.rows();
  const std::size_t m = bm.cols();

  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      scale = std::max({scale, std::abs(bm.payoff_1[i][j]), std::abs(bm.payoff_2[i][j])});
    }
  }
  const double singular_tol = 1e-12 * scale;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      MixedEquilibrium cand{{i}, {1.0}, {j}, {1.0}};
      if (mixed_deviation_gap(bm, cand) <= tol) {
        result.equilibria.push_back(std::move(cand));
      }
    }
  }

  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
      for (std::size_t j1 = 0; j1 < m; ++j1) {
        for (std::size_t j2 = j1 + 1; j2 < m; ++j2) {
          // Player 1's payoff difference between the two rows, against each column.
          const double d1 = bm.payoff_1[i1][j1] - bm.payoff_1[i2][j1];
          const double d2 = bm.payoff_1[i1][j2] - bm.payoff_1[i2][j2];
          // Player 2's payoff difference between the two columns, against each row.
          const double g1 = bm.payoff_2[i1][j1] - bm.payoff_2[i1][j2];
          const double g2 = bm.payoff_2[i2][j1] - bm.payoff_2[i2][j2];
          const bool singular_1 = std::abs(d1 - d2) <= singular_tol;
          const bool singular_2 = std::abs(g1 - g2) <= singular_tol;
          if (singular_1 && singular_2) {
            if (std::abs(d1) <= singular_tol && std::abs(g1) <= singular_tol) {
              MixedEquilibrium mid{{i1, i2}, {0.5, 0.5}, {j1, j2}, {0.5, 0.5}};
              bool all_good = mixed_deviation_gap(bm, mid) <= tol;
              for (std::size_t i : {i1, i2}) {
                for (std::size_t j : {j1, j2}) {
                  MixedEquilibrium corner{{i}, {1.0}, {j}, {1.0}};
                  all_good = all_good && mixed_deviation_gap(bm, corner) <= tol;
                }
              }
              if (all_good) {
                result.continuum = true;
                result.equilibria.push_back(std::move(mid));
              }
            }
            continue;
          }
          if (singular_1 || singular_2) continue;
          const double q = d2 / (d2 - d1);  // P2's weight on j1 making P1 indifferent
          const double p = g2 / (g2 - g1);  // P1's weight on i1 making P2 indifferent
          const double interior = 1e-9;
          if (!(p > interior && p < 1.0 - interior)) continue;
          if (!(q > interior && q < 1.0 - interior)) continue;
          MixedEquilibrium cand{{i1, i2}, {p, 1.0 - p}, {j1, j2}, {q, 1.0 - q}};
          if (mixed_deviation_gap(bm, cand) <= tol) {
            result.equilibria.push_back(std::move(cand));
          }
        }
      }
    }
  }
  return result;
}

enum class PathOutcome { FixedPoint, Cycle, CapReached };

/// Trajectory of alternating best replies: in each round player 1 replies
/// to the current column, then player 2 replies to the new row. Ties break
/// to the lowest index, so the walk is deterministic and must either reach
/// a fixed point or revisit a cell.
struct BestResponsePath {
  std::vector<Cell> visited;
  PathOutcome outcome = PathOutcome::CapReached;
  std::size_t cycle_start = 0;

  /// The repeating portion when outcome == Cycle.
  std::vector<Cell> cycle() const {
    if (outcome != PathOutcome::Cycle) return {};
    return {visited.begin() + static_cast<std::ptrdiff_t>(cycle_start), visited.end()};
  }
};

inline BestResponsePath best_response_path(const Bimatrix& bm, Cell start,
                                           std::size_t max_rounds = 0) {
  const std::size_t n = bm.rows();
  const std::size_t m = bm.cols();
  if (start.row >= n || start.col >= m) {
    throw std::invalid_argument("start cell outside the matrix");
  }
  if (max_rounds == 0) max_rounds = n * m + 2;

  const auto best_row = [&](std::size_t j) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (bm.payoff_1[i][j] > bm.payoff_1[arg][j]) arg = i;
    }
    return arg;
  };
  const auto best_col = [&](std::size_t i) {
    std::size_t arg = 0;
    for (std::size_t j = 1; j < m; ++j) {
      if (bm.payoff_2[i][j] > bm.payoff_2[i][arg]) arg = j;
    }
    return arg;
  };

  BestResponsePath path;
  path.visited.push_back(start);
  Cell current = start;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    Cell next;
    next.row = best_row(current.col);
    next.col = best_col(next.row);
    if (next == current) {
      path.outcome = PathOutcome::FixedPoint;
      return path;
    }
    for (std::size_t k = 0; k < path.visited.size(); ++k) {
      if (path.visited[k] == next) {
        path.outcome = PathOutcome::Cycle;
        path.cycle_start = k;
        return path;
      }
    }
    path.visited.push_back(next);
    current = next;
  }
  return path;
}

/// Interior equilibrium of the unconstrained asymmetric contest. For the
/// linear impact (r = 1) the closed form is e_i = v_i^2 v_j / (v_i + v_j)^2;
/// otherwise a damped alternating best-response iteration, each reply found
/// by golden-section search.
inline EffortPair unconstrained_asymmetric(Valuation v1, Valuation v2,
                                           const ImpactFunction& f);

namespace detail {

template <class G>
double golden_max(const G& g, double lo, double hi, double xtol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = g(x1);
  double f2 = g(x2);
  while (b - a > xtol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = g(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace detail

inline EffortPair unconstrained_asymmetric_iterate(Valuation v1, Valuation v2,
                                                   const ImpactFunction& f,
                                                   double damping = 0.5, double tol = 1e-10,
                                                   int max_iter = 10000) {
  const double xtol1 = 1e-12 * std::max(1.0, v1.v);
  const double xtol2 = 1e-12 * std::max(1.0, v2.v);
  double x = 0.25 * v1.v;
  double y = 0.25 * v2.v;
  for (int it = 0; it < max_iter; ++it) {
    const double bx = detail::golden_max(
        [&](double e) { return expected_payoff(v1, f, e, y); }, 0.0, v1.v, xtol1);
    const double nx = x + damping * (bx - x);
    const double by = detail::golden_max(
        [&](double e) { return expected_payoff(v2, f, e, nx); }, 0.0, v2.v, xtol2);
    const double ny = y + damping * (by - y);
    const double move = std::max(std::abs(nx - x), std::abs(ny - y));
    x = nx;
    y = ny;
    if (move < tol) return {x, y};
  }
  throw std::runtime_error("asymmetric best-response iteration did not converge");
}

inline EffortPair unconstrained_asymmetric(Valuation v1, Valuation v2,
                                           const ImpactFunction& f) {
  if (f.exponent() == 1.0) {
    const double total = v1.v + v2.v;
    return {v1.v * v1.v * v2.v / (total * total), v2.v * v2.v * v1.v / (total * total)};
  }
  return unconstrained_asymmetric_iterate(v1, v2, f);
}

/// Everything the finite-game analysis produces in one pass.
struct NashResult {
  std::vector<Cell> pure_equilibria;
  std::vector<DominanceRelation> dominance_relations;
  MixedSearchResult mixed;
  bool exists_pure = false;
  std::optional<BestResponsePath> br_path;
};

inline NashResult analyze(const Bimatrix& bm, double tie_tol = 1e-12,
                          double mixed_tol = 1e-10) {
  NashResult res;
  res.pure_equilibria = pure_nash(bm, tie_tol);
  res.dominance_relations = dominance(bm, tie_tol);
  res.mixed = mixed_two_support(bm, mixed_tol);
  res.exists_pure = !res.pure_equilibria.empty();
  if (!res.exists_pure) {
    res.br_path = best_response_path(bm, {0, 0});
  }
  return res;
}

}  // namespace contests
