#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lsid/types.hpp"

namespace lsid {

// Guard on C(m,n); enumeration beyond this is refused with CapExceededError
// and callers are pointed at the Monte-Carlo route.
inline constexpr std::uint64_t kDefaultSubsetCap = 10'000'000;

/// Sorted n-subset of the row indices [0, m). Indices are zero-based and
/// strictly increasing.
struct SubsetIndex {
  std::vector<std::size_t> indices;
  std::size_t m = 0;

  std::size_t size() const { return indices.size(); }
};

void validate(const SubsetIndex& p);

/// C(m,n), saturating at cap+1 so callers can compare against a cap without
/// overflow.
std::uint64_t binomial_capped(std::size_t m, std::size_t n,
                              std::uint64_t cap = kDefaultSubsetCap);

/// Throws CapExceededError when C(m,n) exceeds cap.
std::uint64_t require_under_cap(std::size_t m, std::size_t n,
                                std::uint64_t cap = kDefaultSubsetCap);

/// Lexicographic stream over all n-subsets of [0, m). The order is part of
/// the public contract: downstream accumulations depend on it for
/// reproducibility.
class CombinationStream {
 public:
  CombinationStream(std::size_t m, std::size_t n);

  /// Fills `out` with the next subset; returns false when exhausted.
  bool next(SubsetIndex& out);

  void reset();

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::size_t> current_;
  bool done_ = false;
  bool started_ = false;
};

std::vector<SubsetIndex> all_combinations(std::size_t m, std::size_t n);

/// Row selection A_p, keeping row order.
Mat extract_rows(const Mat& a, const SubsetIndex& p);

/// Entry selection b_p, keeping order.
Vec extract_entries(const Vec& b, const SubsetIndex& p);

/// One subsystem record: the subset, det(A_p), and the sub-solution when
/// the subsystem is non-singular. Singular subsystems are not errors; they
/// carry zero weight downstream.
struct SubsetSolution {
  SubsetIndex subset;
  double det_ap = 0.0;
  std::optional<Vec> x_p;
};

SubsetSolution subset_solution(const Mat& a, const Vec& b,
                               const SubsetIndex& p);

/// Column embedding: n x m matrix whose p_i-th column is column i of b,
/// all other columns zero.
Mat embb(const Mat& b, const SubsetIndex& p, std::size_t m);

}  // namespace lsid
