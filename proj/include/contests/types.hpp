#pragma once

#include <cmath>
#include <stdexcept>

namespace contests {

/// Prize value of the contest. Construction rejects non-positive or
/// non-finite values so downstream code never has to re-check.
struct Valuation {
  double v;

  explicit Valuation(double value) : v(value) {
    if (!std::isfinite(value) || value <= 0.0) {
      throw std::invalid_argument("prize value must be positive and finite");
    }
  }
};

/// One effort per player, in player order.
struct EffortPair {
  double e1 = 0.0;
  double e2 = 0.0;

  friend bool operator==(const EffortPair&, const EffortPair&) = default;
};

}  // namespace contests
