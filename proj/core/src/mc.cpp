#include "lsid/mc.hpp"

#include <algorithm>
#include <cmath>

#include "lsid/dense.hpp"
#include "lsid/errors.hpp"

namespace lsid {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  // reject the tail so every residue is equally likely
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

SubsetIndex sample_subset(std::size_t m, std::size_t n, SplitMix64& rng) {
  if (n == 0 || n > m) {
    throw InvalidRangeError("sample_subset: need 1 <= n <= m");
  }
  // Floyd's algorithm: each prefix size j in [m-n, m) admits one element.
  std::vector<std::size_t> chosen;
  chosen.reserve(n);
  for (std::size_t j = m - n; j < m; ++j) {
    const std::size_t t =
        static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(j) + 1));
    if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) {
      chosen.push_back(j);
    } else {
      chosen.push_back(t);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return SubsetIndex{std::move(chosen), m};
}

namespace {

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

WeightedSolveResult mc_solution(const Mat& a, const Vec& b,
                                const McConfig& cfg) {
  if (a.rows() != b.len()) {
    throw DimensionMismatchError("mc_solution: a.rows != b.len");
  }
  if (a.rows() < a.cols()) {
    throw DimensionMismatchError("mc_solution: rows < cols");
  }
  if (cfg.samples == 0) {
    throw InvalidRangeError("mc_solution: samples must be >= 1");
  }
  // full-column-rank gate, same criterion as the exact route's baseline
  (void)pseudo_inverse_solve(a, b);

  const std::size_t m = a.rows(), n = a.cols();

  // First pass over the identical sample stream fixes the det scale, so the
  // working weights (det/s)^2 stay inside the double range.
  double scale = 0.0;
  {
    SplitMix64 rng(cfg.seed);
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
      const SubsetIndex p = sample_subset(m, n, rng);
      scale = std::max(scale, std::fabs(det(extract_rows(a, p))));
    }
  }
  if (scale == 0.0) {
    throw AllSampledSingularError(
        "mc_solution: every sampled subsystem was singular; increase "
        "--samples or use the exact subset route");
  }

  std::vector<KahanSum> numer(n);
  KahanSum denom;
  std::uint64_t singular = 0;

  SplitMix64 rng(cfg.seed);
  for (std::uint64_t k = 0; k < cfg.samples; ++k) {
    const SubsetIndex p = sample_subset(m, n, rng);
    const SubsetSolution s = subset_solution(a, b, p);
    if (!s.x_p) {
      ++singular;
      continue;
    }
    const double sd = s.det_ap / scale;
    const double w = sd * sd;
    denom.add(w);
    for (std::size_t j = 0; j < n; ++j) numer[j].add(w * (*s.x_p)[j]);
  }

  if (denom.sum < kWeightUnderflow) {
    throw AllSampledSingularError(
        "mc_solution: sampled weight mass underflowed; increase --samples "
        "or use the exact subset route");
  }

  WeightedSolveResult r{Vec(n), denom.sum, cfg.samples, singular, scale};
  for (std::size_t j = 0; j < n; ++j) r.solution[j] = numer[j].sum / denom.sum;
  return r;
}

}  // namespace lsid
