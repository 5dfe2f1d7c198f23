#ifndef GORENLAB_RNG_HPP
#define GORENLAB_RNG_HPP

#include <cstdint>

#include "gorenlab/rational.hpp"

namespace gorenlab {

/*
 * Deterministic splitmix64 generator. The standard-library distributions are
 * implementation-defined, so seeded runs would not reproduce across
 * toolchains; this generator pins the byte-exact output contract instead.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi], inclusive; rejection sampling keeps it exact.
  long uniform(long lo, long hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1u;
    std::uint64_t limit = ~0ull - ~0ull % range;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<long>(v % range);
  }

  Rational coefficient(long bound) { return Rational(uniform(-bound, bound)); }

  // Deterministic stream splitting for per-sample sub-seeds.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0xD1B54A32D192ED03ull * (stream + 1)));
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
};

}  // namespace gorenlab

#endif  // GORENLAB_RNG_HPP
