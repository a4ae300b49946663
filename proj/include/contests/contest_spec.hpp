#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contests/choice_set.hpp"
#include "contests/impact.hpp"
#include "contests/types.hpp"

namespace contests {

/// A complete problem statement: who values the prize at what, how effort
/// turns into impact, and what efforts are feasible. Exactly one of the two
/// feasibility forms is present: a shared choice set (symmetric analyses,
/// possibly with continuum segments) or per-player finite effort lists
/// (bimatrix analyses).
struct ContestSpec {
  Valuation v1;
  Valuation v2;
  ImpactFunction impact;
  std::optional<ChoiceSet> choice_set;
  std::optional<std::vector<double>> efforts_1;
  std::optional<std::vector<double>> efforts_2;

  ContestSpec(Valuation valuation_1, Valuation valuation_2, ImpactFunction f,
              std::optional<ChoiceSet> shared,
              std::optional<std::vector<double>> list_1 = std::nullopt,
              std::optional<std::vector<double>> list_2 = std::nullopt)
      : v1(valuation_1),
        v2(valuation_2),
        impact(std::move(f)),
        choice_set(std::move(shared)),
        efforts_1(std::move(list_1)),
        efforts_2(std::move(list_2)) {
    const bool has_set = choice_set.has_value();
    const bool has_lists = efforts_1.has_value();
    if (has_set == has_lists) {
      throw std::invalid_argument(
          "spec must provide exactly one of: a choice set, or per-player effort lists");
    }
    if (efforts_2.has_value() && !efforts_1.has_value()) {
      throw std::invalid_argument("efforts_2 given without efforts_1");
    }
    if (has_lists) {
      validate_list(*efforts_1, "efforts_1");
      if (efforts_2.has_value()) validate_list(*efforts_2, "efforts_2");
    }
  }

  static ContestSpec symmetric(Valuation v, ImpactFunction f, ChoiceSet s) {
    return ContestSpec(v, v, std::move(f), std::move(s));
  }

  bool symmetric_valuations() const { return v1.v == v2.v; }

  /// True when the symmetric solver applies: equal valuations over one
  /// shared choice set.
  bool is_symmetric() const { return symmetric_valuations() && choice_set.has_value(); }

  /// Per-player strategy lists for finite-game analysis. Works for list
  /// specs directly and for shared sets made of points only.
  std::pair<std::vector<double>, std::vector<double>> strategy_lists() const {
    if (efforts_1.has_value()) {
      return {*efforts_1, efforts_2.has_value() ? *efforts_2 : *efforts_1};
    }
    std::vector<double> pts = choice_set->as_points();
    return {pts, pts};
  }

 private:
  static void validate_list(const std::vector<double>& efforts, const char* name) {
    if (efforts.empty()) {
      throw std::invalid_argument(std::string(name) + " must not be empty");
    }
    for (double e : efforts) {
      if (!std::isfinite(e) || e < 0.0) {
        throw std::invalid_argument(std::string(name) +
                                    " entries must be nonnegative and finite");
      }
    }
  }
};

/// Knobs shared by the solver, the oracle and the CLI. Defaults match the
/// documented tolerances; configs may override them.
struct SolverTolerances {
  double root = 1e-12;        // bisection absolute tolerance
  double knife_edge = 1e-9;   // threshold-vs-lower-element tie band
  double tie = 1e-12;         // payoff tie tolerance in finite games
};

struct RunConfig {
  SolverTolerances tolerances;
  double grid_step = 1e-3;
  double eps = 2e-3;
};

}  // namespace contests
