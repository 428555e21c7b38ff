#pragma once

#include <cstdint>
#include <functional>

#include "lsid/subset.hpp"
#include "lsid/types.hpp"

namespace lsid {

// Default tolerance for identity verification; overridable everywhere it is
// used (CLI --tol, verify_identity argument).
inline constexpr double kNumTol = 1e-9;

// All scaled weights (det/s)^2 summing below this means every subsystem was
// effectively singular, i.e. rank < n.
inline constexpr double kWeightUnderflow = 1e-24;

/// Outcome of a subset-weighted solve.
struct WeightedSolveResult {
  Vec solution;
  double weight_sum = 0.0;        // sum of scaled weights (det/s)^2
  std::uint64_t subsets_total = 0;
  std::uint64_t subsets_singular = 0;
  double max_scaled_det = 0.0;    // the normalization scale s = max|det(A_p)|
};

/// Both sides of the matrix identity
///   det(AtA) (AtA)^{-1} At  ==  sum_p det(A_p)^2 embb(A_p^{-1}, p, m)
/// together with the Cauchy-Binet residual f(A) = det(AtA) - sum det(A_p)^2.
struct IdentityReport {
  Mat lhs;
  Mat rhs;
  double max_abs_diff = 0.0;
  double cb_lhs = 0.0;  // det(AtA)
  double cb_rhs = 0.0;  // sum of det(A_p)^2
  double f_value = 0.0;
  bool passed = false;
};

using WeightFn = std::function<double(const SubsetIndex&)>;

/// Weighted average of all non-singular sub-solutions,
/// s = sum_p w_p x_p / sum_p w_p. The caller guarantees w_p = 0 on singular
/// subsets and at least one positive weight.
WeightedSolveResult general_weighted_solution(
    const Mat& a, const Vec& b, const WeightFn& weights,
    std::uint64_t cap = kDefaultSubsetCap);

/// The det^2-weighted solution: every n-subset p of the rows contributes its
/// sub-solution x_p with weight det(A_p)^2. Equals the least-squares
/// solution for full-column-rank A.
WeightedSolveResult det_weighted_solution(const Mat& a, const Vec& b,
                                          std::uint64_t cap =
                                              kDefaultSubsetCap);

/// Left side det(AtA) (AtA)^{-1} At, an n x m matrix.
Mat identity_lhs(const Mat& a);

/// Right side sum_p det(A_p)^2 embb(A_p^{-1}, p, m), accumulated in
/// lexicographic subset order with compensated summation.
Mat identity_rhs(const Mat& a, std::uint64_t cap = kDefaultSubsetCap);

/// f(A) = det(AtA) - sum_p det(A_p)^2; identically zero by Cauchy-Binet.
double cauchy_binet_f(const Mat& a, std::uint64_t cap = kDefaultSubsetCap);

IdentityReport verify_identity(const Mat& a, double num_tol = kNumTol,
                               std::uint64_t cap = kDefaultSubsetCap);

}  // namespace lsid
