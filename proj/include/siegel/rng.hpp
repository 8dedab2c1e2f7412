#pragma once

#include <cstdint>
#include <random>

namespace siegel {

/// Seeded sampling source shared by every job.
///
/// The engine is the standard 64-bit Mersenne Twister (std::mt19937_64, seeded
/// with the job seed). Reference vector: the 10000th output of a default-seeded
/// engine is 9981545732273789042. Real numbers are drawn as (x >> 11) * 2^-53
/// and indices by rejection sampling, so the stream is reproducible from the
/// engine outputs alone without depending on <random> distributions.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";
  static constexpr std::uint64_t kReferenceOutput10000 = 9981545732273789042ULL;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in [0, n).
  std::uint64_t index(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace siegel
