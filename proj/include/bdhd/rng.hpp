#pragma once

#include <cstdint>
#include <random>

namespace bdhd {

// Seedable deterministic generator. The engine (mt19937_64) and all variate
// transforms below are fully specified, so identical seeds give identical
// streams on every platform and standard library.
// splitmix64-based mixer; backbone of all derived seeds and substreams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Inverse-CDF exponential with the given rate; strictly positive.
  double exponential(double rate);

  // Box-Muller; consumes exactly two uniforms per call.
  double gaussian();

  // Uniform integer in [0, bound) via rejection-free 128-bit multiply.
  std::uint64_t bounded(std::uint64_t bound);

  // Independent stream derived from (seed, salt); used to decouple e.g.
  // event times from defender speeds so sweeps share attack streams.
  static RandomSource derive(std::uint64_t seed, std::uint64_t salt);

 private:
  std::mt19937_64 engine_;
};

}  // namespace bdhd
