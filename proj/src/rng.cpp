#include "bdhd/rng.hpp"

#include <cmath>

namespace bdhd {

double RandomSource::exponential(double rate) {
  double u = uniform01();
  while (u == 0.0) u = uniform01();
  return -std::log(u) / rate;
}

double RandomSource::gaussian() {
  double u1 = uniform01();
  while (u1 == 0.0) u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

std::uint64_t RandomSource::bounded(std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  return splitmix64(splitmix64(seed) ^ salt);
}

RandomSource RandomSource::derive(std::uint64_t seed, std::uint64_t salt) {
  return RandomSource(mix_seed(seed, salt));
}

}  // namespace bdhd
