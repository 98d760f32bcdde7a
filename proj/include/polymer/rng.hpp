#pragma once

#include <cstdint>
#include <random>

namespace polymer {

// Reproducible RNG: every sample is a function of (seed, inputs).
// Parallel batches use stream(master, index) so results do not depend
// on thread count or scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix(seed)) {}

  static Rng stream(std::uint64_t master, std::uint64_t index) {
    return Rng(mix(master) ^ mix(index * 0x9e3779b97f4a7c15ULL + 1));
  }

  double uniform() { return unit_(gen_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double angle() { return uniform(0.0, 2.0 * 3.14159265358979323846); }

  // inclusive bounds
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 gen_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace polymer
