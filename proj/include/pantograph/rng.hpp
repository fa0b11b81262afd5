// Small deterministic RNG utilities. Sampling must be reproducible across
// platforms and thread schedules, so samples are keyed by (seed, index)
// instead of drawn from a shared sequential stream.
#pragma once

#include <cstdint>

namespace pantograph {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based generator: stream(seed, index) yields an independent small
// sequence for each index, stable under parallel evaluation order.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t index)
      : state_(splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL))) {}
  explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

}  // namespace pantograph
