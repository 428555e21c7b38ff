#pragma once

#include <cstddef>
#include <vector>

#include "lsid/types.hpp"

namespace lsid {

// Singularity threshold is scale-relative: a pivot counts as zero when its
// magnitude falls below kPivotTolFactor * max|entry| of the input matrix.
inline constexpr double kPivotTolFactor = 1e-12;

// Relative R-diagonal test for full column rank in the QR route.
inline constexpr double kRankTol = 1e-10;

// Residual bound factor for square solves and inverses.
inline constexpr double kSolverTol = 1e-10;

/// Packed LU factorization with partial pivoting: perm applied to rows of
/// the input gives L (unit lower) times U, both stored in lu.
struct LuFactors {
  Mat lu;
  std::vector<std::size_t> perm;
  int sign = 1;            // permutation parity
  bool singular = false;   // some pivot magnitude below threshold
  double pivot_tol = 0.0;  // absolute threshold used
};

Mat transpose(const Mat& m);
Mat matmul(const Mat& a, const Mat& b);
Vec matvec(const Mat& a, const Vec& v);

LuFactors lu_decompose(const Mat& m);

double det(const LuFactors& f);
double det(const Mat& m);

Vec lu_solve(const LuFactors& f, const Vec& v);
Vec solve_square(const Mat& m, const Vec& v);
Mat invert_square(const Mat& m);

/// Least-squares solution of an overdetermined full-column-rank system via
/// Householder QR. Throws RankDeficientError when any |R_ii| falls below
/// kRankTol * max|R_jj|.
Vec pseudo_inverse_solve(const Mat& a, const Vec& b);

/// The literal normal-equations route (AtA)^{-1} At b, kept as a separate
/// path for exact comparison against the determinant-weighted identity.
Vec normal_equations_solve(const Mat& a, const Vec& b);

/// <M,N> = tr(M N^t) = sum_ij M_ij N_ij.
double frobenius_inner(const Mat& m, const Mat& n);

double trace(const Mat& m);

}  // namespace lsid
