#pragma once

#include <cstdint>
#include <random>

namespace contests {

/// Seeded uniform double source. Bits are turned into doubles by hand (53
/// explicit mantissa bits) instead of std::uniform_real_distribution, whose
/// output is implementation-defined; identical seeds must give identical
/// bytes everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t bits() { return gen_(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace contests
