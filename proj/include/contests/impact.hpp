#pragma once

#include <cmath>
#include <stdexcept>

namespace contests {

enum class ImpactFamily { ScaledPower };

/// Effort-to-impact transform a * e^r with a > 0 and 0 < r <= 1.
///
/// The exponent cap keeps the transform concave, which is what makes
/// symmetric best responses single-peaked; the scale has no effect on win
/// probabilities (it cancels in the ratio) but is kept so configs can state
/// impacts in natural units. Negative efforts are a caller bug and are
/// rejected, never clamped.
class ImpactFunction {
 public:
  ImpactFunction(ImpactFamily family, double exponent, double scale)
      : family_(family), r_(exponent), a_(scale) {
    if (family != ImpactFamily::ScaledPower) {
      throw std::invalid_argument("unknown impact family");
    }
    if (!std::isfinite(exponent) || exponent <= 0.0 || exponent > 1.0) {
      throw std::invalid_argument("impact exponent r must satisfy 0 < r <= 1");
    }
    if (!std::isfinite(scale) || scale <= 0.0) {
      throw std::invalid_argument("impact scale a must be positive and finite");
    }
  }

  static ImpactFunction scaled_power(double exponent, double scale = 1.0) {
    return ImpactFunction(ImpactFamily::ScaledPower, exponent, scale);
  }

  static ImpactFunction identity() { return scaled_power(1.0, 1.0); }

  ImpactFamily family() const { return family_; }
  double exponent() const { return r_; }
  double scale() const { return a_; }

  /// a * e^r. Exactly zero at zero effort.
  double operator()(double e) const {
    if (!std::isfinite(e) || e < 0.0) {
      throw std::invalid_argument("effort must be nonnegative and finite");
    }
    if (e == 0.0) return 0.0;
    if (r_ == 1.0) return a_ * e;
    return a_ * std::pow(e, r_);
  }

  /// a * r * e^(r-1). For r < 1 the derivative blows up at zero, so zero
  /// effort is rejected there; for r = 1 it is the constant a.
  double derivative(double e) const {
    if (!std::isfinite(e) || e < 0.0) {
      throw std::invalid_argument("effort must be nonnegative and finite");
    }
    if (r_ == 1.0) return a_;
    if (e == 0.0) {
      throw std::invalid_argument("impact derivative is unbounded at zero effort for r < 1");
    }
    return a_ * r_ * std::pow(e, r_ - 1.0);
  }

 private:
  ImpactFamily family_;
  double r_;
  double a_;
};

}  // namespace contests
