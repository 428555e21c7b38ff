#include "lsid/identity.hpp"

#include <algorithm>
#include <cmath>

#include "lsid/dense.hpp"
#include "lsid/errors.hpp"

namespace lsid {

namespace {

// Compensated (Kahan) accumulator; accumulation order downstream is
// lexicographic, so summed results are bit-reproducible.
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

// Scale pass: s = max_p |det(A_p)|. Working weights are (det/s)^2 so that
// det^2 over many subsets cannot overflow the double range; the ratio in
// the weighted average is unchanged by uniform rescaling.
double max_abs_subset_det(const Mat& a) {
  CombinationStream stream(a.rows(), a.cols());
  SubsetIndex p;
  double s = 0.0;
  while (stream.next(p)) {
    s = std::max(s, std::fabs(det(extract_rows(a, p))));
  }
  return s;
}

}  // namespace

WeightedSolveResult general_weighted_solution(const Mat& a, const Vec& b,
                                              const WeightFn& weights,
                                              std::uint64_t cap) {
  if (a.rows() != b.len()) {
    throw DimensionMismatchError("general_weighted_solution: a.rows != b.len");
  }
  if (a.rows() < a.cols()) {
    throw DimensionMismatchError("general_weighted_solution: rows < cols");
  }
  const std::uint64_t total = require_under_cap(a.rows(), a.cols(), cap);

  const std::size_t n = a.cols();
  std::vector<KahanSum> numer(n);
  KahanSum denom;
  std::uint64_t singular = 0;

  CombinationStream stream(a.rows(), n);
  SubsetIndex p;
  while (stream.next(p)) {
    const SubsetSolution s = subset_solution(a, b, p);
    if (!s.x_p) {
      ++singular;
      continue;
    }
    const double w = weights(p);
    if (w < 0.0) {
      throw InvalidRangeError("general_weighted_solution: negative weight");
    }
    if (w == 0.0) continue;
    denom.add(w);
    for (std::size_t j = 0; j < n; ++j) numer[j].add(w * (*s.x_p)[j]);
  }

  if (singular == total) {
    throw RankDeficientError(
        "general_weighted_solution: every subsystem is singular");
  }
  if (denom.sum <= 0.0) {
    throw AllWeightsZeroError(
        "general_weighted_solution: all weights are zero");
  }

  WeightedSolveResult r{Vec(n), denom.sum, total, singular, 0.0};
  for (std::size_t j = 0; j < n; ++j) r.solution[j] = numer[j].sum / denom.sum;
  return r;
}

WeightedSolveResult det_weighted_solution(const Mat& a, const Vec& b,
                                          std::uint64_t cap) {
  if (a.rows() != b.len()) {
    throw DimensionMismatchError("det_weighted_solution: a.rows != b.len");
  }
  if (a.rows() < a.cols()) {
    throw DimensionMismatchError("det_weighted_solution: rows < cols");
  }
  const std::uint64_t total = require_under_cap(a.rows(), a.cols(), cap);

  const double scale = max_abs_subset_det(a);
  if (scale == 0.0) {
    throw RankDeficientError(
        "det_weighted_solution: all subset determinants vanish (rank < n)");
  }

  const std::size_t n = a.cols();
  std::vector<KahanSum> numer(n);
  KahanSum denom;
  std::uint64_t singular = 0;

  CombinationStream stream(a.rows(), n);
  SubsetIndex p;
  while (stream.next(p)) {
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
    throw RankDeficientError(
        "det_weighted_solution: total weight underflow (rank < n)");
  }

  WeightedSolveResult r{Vec(n), denom.sum, total, singular, scale};
  for (std::size_t j = 0; j < n; ++j) r.solution[j] = numer[j].sum / denom.sum;
  return r;
}

Mat identity_lhs(const Mat& a) {
  if (a.rows() < a.cols()) {
    throw DimensionMismatchError("identity_lhs: rows < cols");
  }
  const Mat gram = matmul(transpose(a), a);
  const LuFactors f = lu_decompose(gram);
  if (f.singular) {
    throw RankDeficientError("identity_lhs: singular Gram matrix");
  }
  const double dg = det(f);
  // Solve G X = det(G) At column by column. Scaling the right-hand side
  // before the solve keeps integer-valued instances exact.
  const std::size_t n = a.cols(), m = a.rows();
  Mat result(n, m);
  Vec col(n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = dg * a(j, i);
    const Vec x = lu_solve(f, col);
    for (std::size_t i = 0; i < n; ++i) result(i, j) = x[i];
  }
  return result;
}

Mat identity_rhs(const Mat& a, std::uint64_t cap) {
  if (a.rows() < a.cols()) {
    throw DimensionMismatchError("identity_rhs: rows < cols");
  }
  require_under_cap(a.rows(), a.cols(), cap);

  const std::size_t m = a.rows(), n = a.cols();
  std::vector<KahanSum> acc(n * m);

  CombinationStream stream(m, n);
  SubsetIndex p;
  while (stream.next(p)) {
    const Mat ap = extract_rows(a, p);
    const LuFactors f = lu_decompose(ap);
    if (f.singular) continue;
    const double d = det(f);
    const Mat term = embb(invert_square(ap), p, m);
    const double w = d * d;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < p.size(); ++k) {
        // only columns p_k of the embedding are nonzero
        acc[i * m + p.indices[k]].add(w * term(i, p.indices[k]));
      }
    }
  }

  Mat result(n, m);
  for (std::size_t idx = 0; idx < n * m; ++idx) {
    result.data()[idx] = acc[idx].sum;
  }
  return result;
}

double cauchy_binet_f(const Mat& a, std::uint64_t cap) {
  if (a.rows() < a.cols()) {
    throw DimensionMismatchError("cauchy_binet_f: rows < cols");
  }
  require_under_cap(a.rows(), a.cols(), cap);

  const double gram_det = det(matmul(transpose(a), a));

  KahanSum sum;
  CombinationStream stream(a.rows(), a.cols());
  SubsetIndex p;
  while (stream.next(p)) {
    const double d = det(extract_rows(a, p));
    sum.add(d * d);
  }
  return gram_det - sum.sum;
}

IdentityReport verify_identity(const Mat& a, double num_tol,
                               std::uint64_t cap) {
  Mat lhs = identity_lhs(a);
  Mat rhs = identity_rhs(a, cap);

  double diff = 0.0;
  for (std::size_t idx = 0; idx < lhs.data().size(); ++idx) {
    diff = std::max(diff, std::fabs(lhs.data()[idx] - rhs.data()[idx]));
  }

  const double cb_lhs = det(matmul(transpose(a), a));
  const double f_value = cauchy_binet_f(a, cap);
  const double cb_rhs = cb_lhs - f_value;

  IdentityReport report{std::move(lhs), std::move(rhs), diff,
                        cb_lhs,         cb_rhs,         f_value, false};
  report.passed = diff <= num_tol * (1.0 + max_abs(report.lhs)) &&
                  std::fabs(f_value) <= num_tol * (1.0 + std::fabs(cb_lhs));
  return report;
}

}  // namespace lsid
