#include "lsid/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lsid/errors.hpp"

namespace lsid {

Mat transpose(const Mat& m) {
  Mat t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatchError("matmul: a.cols != b.rows");
  }
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Vec matvec(const Mat& a, const Vec& v) {
  if (a.cols() != v.len()) {
    throw DimensionMismatchError("matvec: a.cols != v.len");
  }
  Vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

LuFactors lu_decompose(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError("lu_decompose: matrix must be square");
  }
  const std::size_t d = m.rows();
  LuFactors f{m, std::vector<std::size_t>(d), 1, false,
              kPivotTolFactor * max_abs(m)};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  Mat& lu = f.lu;

  for (std::size_t k = 0; k < d; ++k) {
    std::size_t piv = k;
    double best = std::fabs(lu(k, k));
    for (std::size_t i = k + 1; i < d; ++i) {
      const double v = std::fabs(lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv != k) {
      for (std::size_t j = 0; j < d; ++j) std::swap(lu(k, j), lu(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    if (best <= f.pivot_tol) {
      f.singular = true;
      continue;
    }
    const double inv_piv = 1.0 / lu(k, k);
    for (std::size_t i = k + 1; i < d; ++i) {
      const double l = lu(i, k) * inv_piv;
      lu(i, k) = l;
      if (l == 0.0) continue;
      for (std::size_t j = k + 1; j < d; ++j) lu(i, j) -= l * lu(k, j);
    }
  }
  return f;
}

double det(const LuFactors& f) {
  if (f.singular) return 0.0;
  double d = f.sign;
  for (std::size_t i = 0; i < f.lu.rows(); ++i) d *= f.lu(i, i);
  return d;
}

double det(const Mat& m) { return det(lu_decompose(m)); }

Vec lu_solve(const LuFactors& f, const Vec& v) {
  if (f.singular) throw SingularMatrixError("lu_solve: singular matrix");
  const std::size_t d = f.lu.rows();
  if (v.len() != d) throw DimensionMismatchError("lu_solve: size mismatch");
  Vec x(d);
  // forward substitution on permuted rhs, unit lower triangle
  for (std::size_t i = 0; i < d; ++i) {
    double s = v[f.perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s;
  }
  // back substitution
  for (std::size_t ii = d; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t j = ii + 1; j < d; ++j) s -= f.lu(ii, j) * x[j];
    x[ii] = s / f.lu(ii, ii);
  }
  return x;
}

Vec solve_square(const Mat& m, const Vec& v) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError("solve_square: matrix must be square");
  }
  if (m.rows() != v.len()) {
    throw DimensionMismatchError("solve_square: rhs length mismatch");
  }
  return lu_solve(lu_decompose(m), v);
}

Mat invert_square(const Mat& m) {
  const LuFactors f = lu_decompose(m);
  if (f.singular) throw SingularMatrixError("invert_square: singular matrix");
  const std::size_t d = m.rows();
  Mat inv(d, d);
  Vec e(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::fill(e.data().begin(), e.data().end(), 0.0);
    e[j] = 1.0;
    const Vec col = lu_solve(f, e);
    for (std::size_t i = 0; i < d; ++i) inv(i, j) = col[i];
  }
  return inv;
}

namespace {

// Householder QR, factors stored in place: R in the upper triangle, the
// reflector vectors below the diagonal with scaling factors in beta.
struct QrFactors {
  Mat qr;
  std::vector<double> rdiag;
};

QrFactors qr_decompose(const Mat& a) {
  const std::size_t m = a.rows(), n = a.cols();
  QrFactors f{a, std::vector<double>(n, 0.0)};
  Mat& q = f.qr;
  for (std::size_t k = 0; k < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k; i < m; ++i) norm = std::hypot(norm, q(i, k));
    if (norm == 0.0) {
      f.rdiag[k] = 0.0;
      continue;
    }
    if (q(k, k) > 0.0) norm = -norm;
    for (std::size_t i = k; i < m; ++i) q(i, k) /= norm;
    q(k, k) -= 1.0;  // reflector is I + v v^t / v_k with v stored in column k
    for (std::size_t j = k + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < m; ++i) s += q(i, k) * q(i, j);
      s /= q(k, k);
      for (std::size_t i = k; i < m; ++i) q(i, j) += s * q(i, k);
    }
    f.rdiag[k] = norm;
  }
  return f;
}

void check_full_rank(const QrFactors& f) {
  double rmax = 0.0;
  for (double r : f.rdiag) rmax = std::max(rmax, std::fabs(r));
  for (double r : f.rdiag) {
    if (std::fabs(r) <= kRankTol * rmax) {
      throw RankDeficientError(
          "pseudo_inverse_solve: matrix is numerically rank deficient");
    }
  }
}

}  // namespace

Vec pseudo_inverse_solve(const Mat& a, const Vec& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m < n) {
    throw DimensionMismatchError("pseudo_inverse_solve: rows < cols");
  }
  if (b.len() != m) {
    throw DimensionMismatchError("pseudo_inverse_solve: rhs length mismatch");
  }
  const QrFactors f = qr_decompose(a);
  check_full_rank(f);
  Vec y = b;
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t i = k; i < m; ++i) s += f.qr(i, k) * y[i];
    s /= f.qr(k, k);
    for (std::size_t i = k; i < m; ++i) y[i] += s * f.qr(i, k);
  }
  Vec x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= f.qr(ii, j) * x[j];
    x[ii] = s / f.rdiag[ii];
  }
  return x;
}

Vec normal_equations_solve(const Mat& a, const Vec& b) {
  if (a.rows() < a.cols()) {
    throw DimensionMismatchError("normal_equations_solve: rows < cols");
  }
  if (b.len() != a.rows()) {
    throw DimensionMismatchError("normal_equations_solve: rhs length mismatch");
  }
  const Mat at = transpose(a);
  const Mat gram = matmul(at, a);
  const LuFactors f = lu_decompose(gram);
  if (f.singular) {
    throw RankDeficientError("normal_equations_solve: singular Gram matrix");
  }
  return lu_solve(f, matvec(at, b));
}

double frobenius_inner(const Mat& m, const Mat& n) {
  if (!m.same_shape(n)) {
    throw DimensionMismatchError("frobenius_inner: shape mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < m.data().size(); ++i) {
    s += m.data()[i] * n.data()[i];
  }
  return s;
}

double trace(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError("trace: matrix must be square");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

}  // namespace lsid
