#pragma once

#include <cstdint>

namespace rlab {

// splitmix64 step; used instead of <random> engines/distributions so that
// sampled values are identical across standard library implementations.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // decorrelate nearby seeds (worker seeds are seed + worker index)
    next();
    next();
  }

  std::uint64_t next() { return splitmix64(state_); }

  // uniform in [0, 1)
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // uniform integer in [0, n), n > 0
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  int index(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

 private:
  std::uint64_t state_;
};

}  // namespace rlab
