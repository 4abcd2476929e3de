#pragma once

#include <cstdint>

namespace herd {

// Default seed for weight initialization and test sampling. Any run that does
// not pass an explicit seed uses this value, so results are reproducible
// across machines and standard-library versions.
inline constexpr std::uint64_t kDefaultSeed = 1;

// SplitMix64. Used instead of <random> engines so that seeded streams are
// bit-identical everywhere (libstdc++ distributions are not portable).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace herd
