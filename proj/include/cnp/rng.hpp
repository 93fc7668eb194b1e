#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace cnp {

// Deterministic random source. Every stochastic decision in the library goes
// through this wrapper on the single reproduction path, so a run is a pure
// function of its seed. Bounded draws are implemented here instead of
// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [0, bound), bound > 0. Unbiased via rejection.
  std::uint64_t uniform_index(std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform_real() < p; }

private:
  std::mt19937_64 gen_;
};

}  // namespace cnp
