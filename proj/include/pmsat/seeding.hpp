#pragma once

#include <cstdint>
#include <random>

namespace pmsat {

/// Substreams derived from one user seed. Each stage of the pipeline draws
/// from its own stream so that changing one stage never perturbs another.
enum class SeedStream : std::uint64_t {
  kWitness = 1,
  kDirectSearch = 2,
  kPpsz = 3,
  kExperiment = 4,
  kPlanted = 5,
  kGuesses = 6,
};

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based derivation: seed' = splitmix64(splitmix64(seed ^ stream*φ) + index).
constexpr std::uint64_t derive_seed(std::uint64_t seed, SeedStream stream,
                                    std::uint64_t index = 0) {
  std::uint64_t mixed =
      splitmix64(seed ^ (static_cast<std::uint64_t>(stream) * 0x9e3779b97f4a7c15ULL));
  return splitmix64(mixed + index);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, SeedStream stream, std::uint64_t index = 0) {
  return Rng(derive_seed(seed, stream, index));
}

}  // namespace pmsat
