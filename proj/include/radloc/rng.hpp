#pragma once

#include <cmath>
#include <cstdint>

namespace radloc {

// SplitMix64 (Steele, Lea & Flood's public-domain reference sequence).
// The whole stream is fixed by the 64-bit seed alone, so anything derived
// from a seed is reproducible across runs and thread counts. Nearby seeds
// (e.g. master_seed XOR trial index) give decorrelated streams, which the
// per-trial sub-seed derivation relies on.
//
// The Gaussian draw uses the Box-Muller transform rather than
// std::normal_distribution, whose algorithm is implementation-defined and
// would break byte-identical output files between standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log() argument.
  double uniform01_positive() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Standard normal, one value per call (the sine branch is discarded).
  double gaussian() {
    const double u1 = uniform01_positive();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

 private:
  static constexpr double kPi = 3.141592653589793238462643383279502884;
  std::uint64_t state_;
};

}  // namespace radloc
