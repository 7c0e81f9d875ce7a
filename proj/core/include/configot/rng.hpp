#pragma once

#include <cmath>
#include <cstdint>

namespace configot {

/// Deterministic random stream keyed by (seed, stream). Streams derived from
/// the same seed with distinct stream ids are independent for Monte-Carlo
/// purposes, so estimators can hand stream i to sample i and stay
/// reproducible regardless of evaluation order. The generator is the
/// splitmix64 sequence; all samplers below are implemented on top of it so
/// results do not depend on standard-library distribution internals.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream) {
    state_ = mix(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
    state_ = mix(state_ ^ 0xBF58476D1CE4E5B9ULL);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Unbiased uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

  /// Poisson(lambda) by Knuth's product method, split into chunks so large
  /// lambda stays exact (Poisson additivity).
  std::uint64_t poisson(double lambda);

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t poisson_knuth(double lambda);

  std::uint64_t state_;
};

inline std::uint64_t RngStream::poisson(double lambda) {
  std::uint64_t total = 0;
  while (lambda > 30.0) {
    total += poisson_knuth(30.0);
    lambda -= 30.0;
  }
  return total + poisson_knuth(lambda);
}

inline std::uint64_t RngStream::poisson_knuth(double lambda) {
  const double threshold = std::exp(-lambda);
  double prod = 1.0;
  std::uint64_t n = 0;
  do {
    prod *= uniform01();
    ++n;
  } while (prod > threshold);
  return n - 1;
}

}  // namespace configot
