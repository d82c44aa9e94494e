#pragma once

#include <cmath>
#include <cstdint>

namespace spectrace {

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so parallel batches reproduce bit-identically
// no matter how work is split.  The mixer is splitmix64.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream), counter_(0) {}

  // Derive an independent stream, e.g. one per shot batch or per restart.
  CounterRng substream(std::uint64_t stream) const { return CounterRng(seed_, stream); }

  std::uint64_t next_u64() { return mix(seed_, stream_, counter_++); }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // i in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    // Rejection-free modulo is fine at the sample counts used here.
    return next_u64() % n;
  }

  bool bernoulli(double p) { return next_double() < p; }

  // Standard normal via Box-Muller.
  double normal() {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 <= 0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    std::uint64_t z = seed;
    z ^= 0x9e3779b97f4a7c15ULL + (stream << 1);
    z += 0x9e3779b97f4a7c15ULL * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_;
};

}  // namespace spectrace
