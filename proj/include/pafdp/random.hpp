#pragma once

#include <cstdint>
#include <random>

namespace pafdp {

/// SplitMix64 finalizer, used to derive independent substream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// std::mt19937_64 has a standard-mandated output sequence; the
/// distributions in <random> do not, so draws go through uniform_below.
using Rng = std::mt19937_64;

/// Substream `stream` of `seed`: mt19937_64 seeded with
/// splitmix64(seed ^ splitmix64(stream)).
inline Rng substream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(seed ^ splitmix64(stream)));
}

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace pafdp
