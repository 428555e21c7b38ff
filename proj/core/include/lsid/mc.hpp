#pragma once

#include <cstdint>

#include "lsid/identity.hpp"
#include "lsid/subset.hpp"
#include "lsid/types.hpp"

namespace lsid {

/// SplitMix64: 64-bit state s; each step updates
///   s += 0x9E3779B97F4A7C15
/// and returns
///   z = s; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
/// Small, fully specified, and trivially reimplementable, so sampled
/// results reproduce across implementations from the seed alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct McConfig {
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  std::uint64_t report_stride = 0;  // 0: no progress callbacks
};

/// Uniform n-subset of [0, m) via Floyd's sampling, returned sorted.
SubsetIndex sample_subset(std::size_t m, std::size_t n, SplitMix64& rng);

/// Self-normalized importance-sampling estimate of the det^2-weighted
/// solution: subsets drawn uniformly, ratio of sample sums of det^2 x_p and
/// det^2. Deterministic for a fixed seed; singular draws contribute zero to
/// both sums.
WeightedSolveResult mc_solution(const Mat& a, const Vec& b,
                                const McConfig& cfg);

}  // namespace lsid
