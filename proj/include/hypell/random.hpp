#pragma once

// Seeded randomness for multistarts and verification sweeps. std::mt19937_64
// is fully specified; the conversion to doubles is done here so results do
// not depend on the standard library's distributions.

#include <cmath>
#include <cstdint>
#include <random>

namespace hypell {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  /// Uniform on (0, 1].
  double uniform_open0() { return double((eng_() >> 11) + 1) * 0x1.0p-53; }
  /// exp of a uniform on [log a, log b].
  double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hypell
