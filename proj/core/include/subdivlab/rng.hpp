#pragma once

#include <cstdint>
#include <random>

namespace subdivlab {

// SplitMix64 finalizer. Used to derive independent stream seeds from a
// master seed so that per-trial output does not depend on scheduling.
std::uint64_t splitmix64(std::uint64_t x);

// Seed of stream `index` under master seed `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Bit-reproducible generator: std::mt19937_64 is fully specified by the
// standard, and the helpers below avoid the implementation-defined
// std::*_distribution classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  // True with probability threshold / 2^53, where threshold comes from
  // bernoulli_threshold().
  bool bernoulli(std::uint64_t threshold) { return (next() >> 11) < threshold; }

  static std::uint64_t bernoulli_threshold(double p);

 private:
  std::mt19937_64 engine_;
};

}  // namespace subdivlab
