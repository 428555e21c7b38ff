#pragma once

#include <cstddef>

#include "lsid/subset.hpp"
#include "lsid/types.hpp"

namespace lsid {

// Central differences with h = kFdStepFactor * (1 + |entry|).
inline constexpr double kFdStepFactor = 1e-6;
inline constexpr double kFdTol = 1e-5;

/// U_ij: all-zero matrix except for a single unit entry at (i, j).
struct BasisMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t i = 0;
  std::size_t j = 0;

  Mat materialize() const;
};

struct FdCheckResult {
  double max_rel_err = 0.0;
  std::size_t worst_row = 0;
  std::size_t worst_col = 0;
  double step = 0.0;
  bool passed = false;
};

/// d det(A) / dA_ij against det(A) * (A^{-1})_ji by central differences.
FdCheckResult check_det_derivative(const Mat& a, std::size_t i, std::size_t j,
                                   double fd_tol = kFdTol);

/// d A^{-1} / dA_ij against -A^{-1} U_ij A^{-1}, entrywise.
FdCheckResult check_inverse_derivative(const Mat& a, std::size_t i,
                                       std::size_t j, double fd_tol = kFdTol);

/// tr(S M) == tr(S M^t) for symmetric S.
FdCheckResult check_trace_symmetry(const Mat& s, const Mat& m,
                                   double tol = 1e-12);

/// Reconstructs M entrywise as <M, U_ij> and confirms the reconstruction
/// matches M exactly (inner-product non-degeneracy).
bool check_inner_product_separation(const Mat& m);

/// FD gradient of f(A) = det(AtA) - sum det(A_p)^2 at every entry; f is
/// identically zero, so the gradient must vanish.
FdCheckResult check_identity_gradient(const Mat& a, double fd_tol = 1e-6,
                                      std::uint64_t cap = kDefaultSubsetCap);

}  // namespace lsid
