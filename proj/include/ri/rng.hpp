#pragma once

#include <cstdint>

namespace ri {

// SplitMix64 (Vigna / Steele et al.). Small, fast, and fully specified, so
// streams are reproducible across platforms and compilers. std::mt19937 with
// std::uniform_* would not be: the distributions are implementation-defined.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform in [0, bound) with rejection, exact for any bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

// Finalizer of SplitMix64, used as a 64-bit mixer for seed derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based seed derivation: the sub-seed for (stream, index) depends only
// on those values, never on how many draws happened before. This is what makes
// parallel and serial runs agree bit for bit.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t index = 0) {
  std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL);
  h = mix64(h ^ (stream + 0xD1B54A32D192ED03ULL));
  h = mix64(h ^ (index + 0x8CB92BA72F3D8DD7ULL));
  return h;
}

// Stream tags. Distinct tags keep unrelated draws decorrelated under one seed.
namespace streams {
inline constexpr std::uint64_t kPositions = 1;
inline constexpr std::uint64_t kAssignmentDraw = 2;
inline constexpr std::uint64_t kUniformityBase = 3;
inline constexpr std::uint64_t kReplicateAssignment = 4;
inline constexpr std::uint64_t kReplicateMethod = 5;
}  // namespace streams

}  // namespace ri
