#include "lsid/calculus.hpp"

#include <cmath>

#include "lsid/dense.hpp"
#include "lsid/errors.hpp"
#include "lsid/identity.hpp"

namespace lsid {

Mat BasisMatrix::materialize() const {
  Mat m(rows, cols);
  m(i, j) = 1.0;
  return m;
}

namespace {

double fd_step(double entry) { return kFdStepFactor * (1.0 + std::fabs(entry)); }

Mat perturbed(const Mat& a, std::size_t i, std::size_t j, double delta) {
  Mat p = a;
  p(i, j) += delta;
  return p;
}

}  // namespace

FdCheckResult check_det_derivative(const Mat& a, std::size_t i, std::size_t j,
                                   double fd_tol) {
  const Mat inv = invert_square(a);  // throws on singular input
  const double analytic = det(a) * inv(j, i);

  const double h = fd_step(a(i, j));
  const double fd =
      (det(perturbed(a, i, j, h)) - det(perturbed(a, i, j, -h))) / (2.0 * h);

  const double rel = std::fabs(fd - analytic) / (1.0 + std::fabs(analytic));
  return {rel, i, j, h, rel <= fd_tol};
}

FdCheckResult check_inverse_derivative(const Mat& a, std::size_t i,
                                       std::size_t j, double fd_tol) {
  const Mat inv = invert_square(a);
  const BasisMatrix uij{a.rows(), a.cols(), i, j};
  Mat analytic = matmul(matmul(inv, uij.materialize()), inv);
  for (double& x : analytic.data()) x = -x;

  const double h = fd_step(a(i, j));
  const Mat inv_plus = invert_square(perturbed(a, i, j, h));
  const Mat inv_minus = invert_square(perturbed(a, i, j, -h));

  FdCheckResult r{0.0, 0, 0, h, false};
  for (std::size_t r2 = 0; r2 < a.rows(); ++r2) {
    for (std::size_t c2 = 0; c2 < a.cols(); ++c2) {
      const double fd = (inv_plus(r2, c2) - inv_minus(r2, c2)) / (2.0 * h);
      const double rel = std::fabs(fd - analytic(r2, c2)) /
                         (1.0 + std::fabs(analytic(r2, c2)));
      if (rel > r.max_rel_err) {
        r.max_rel_err = rel;
        r.worst_row = r2;
        r.worst_col = c2;
      }
    }
  }
  r.passed = r.max_rel_err <= fd_tol;
  return r;
}

FdCheckResult check_trace_symmetry(const Mat& s, const Mat& m, double tol) {
  if (s.rows() != s.cols() || !s.same_shape(m)) {
    throw DimensionMismatchError("check_trace_symmetry: need equal squares");
  }
  const Mat st = transpose(s);
  double asym = 0.0;
  for (std::size_t idx = 0; idx < s.data().size(); ++idx) {
    asym = std::max(asym, std::fabs(s.data()[idx] - st.data()[idx]));
  }
  if (asym > 1e-12) {
    throw NonSymmetricError("check_trace_symmetry: S is not symmetric");
  }

  const double lhs = trace(matmul(s, m));
  const double rhs = trace(matmul(s, transpose(m)));
  const double err = std::fabs(lhs - rhs) / (1.0 + std::fabs(lhs));
  return {err, 0, 0, 0.0, err <= tol};
}

bool check_inner_product_separation(const Mat& m) {
  Mat rebuilt(m.rows(), m.cols());
  bool all_zero = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BasisMatrix uij{m.rows(), m.cols(), i, j};
      const double c = frobenius_inner(m, uij.materialize());
      rebuilt(i, j) = c;
      if (c != 0.0) all_zero = false;
    }
  }
  if (!(rebuilt == m)) return false;
  // <M, U_ij> = 0 for all (i,j) must force M = 0
  if (all_zero) return max_abs(m) == 0.0;
  return true;
}

FdCheckResult check_identity_gradient(const Mat& a, double fd_tol,
                                      std::uint64_t cap) {
  const double scale = 1.0 + det(matmul(transpose(a), a));

  FdCheckResult r{0.0, 0, 0, 0.0, false};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double h = fd_step(a(i, j));
      const double grad = (cauchy_binet_f(perturbed(a, i, j, h), cap) -
                           cauchy_binet_f(perturbed(a, i, j, -h), cap)) /
                          (2.0 * h);
      const double rel = std::fabs(grad) / scale;
      if (rel > r.max_rel_err) {
        r.max_rel_err = rel;
        r.worst_row = i;
        r.worst_col = j;
        r.step = h;
      }
    }
  }
  r.passed = r.max_rel_err <= fd_tol;
  return r;
}

}  // namespace lsid
