#pragma once

#include <cmath>
#include <random>

#include "lsid/dense.hpp"
#include "lsid/types.hpp"

namespace lsid_test {

inline lsid::Mat random_mat(std::mt19937_64& rng, std::size_t rows,
                            std::size_t cols, double lo = -1.0,
                            double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  lsid::Mat m(rows, cols);
  for (double& x : m.data()) x = dist(rng);
  return m;
}

inline lsid::Vec random_vec(std::mt19937_64& rng, std::size_t len,
                            double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  lsid::Vec v(len);
  for (double& x : v.data()) x = dist(rng);
  return v;
}

inline double linf_diff(const lsid::Vec& a, const lsid::Vec& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.len(); ++i)
    d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

inline double linf_diff(const lsid::Mat& a, const lsid::Mat& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    d = std::max(d, std::fabs(a.data()[i] - b.data()[i]));
  return d;
}

inline double norm1(const lsid::Mat& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += std::fabs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

// 1-norm condition number of the Gram matrix AtA; infinity when singular.
inline double gram_cond(const lsid::Mat& a) {
  const lsid::Mat g = lsid::matmul(lsid::transpose(a), a);
  const lsid::LuFactors f = lsid::lu_decompose(g);
  if (f.singular) return std::numeric_limits<double>::infinity();
  return norm1(g) * norm1(lsid::invert_square(g));
}

// Random full-column-rank matrix with cond(AtA) below the given bound,
// entries uniform in [-1, 1].
inline lsid::Mat well_conditioned_mat(std::mt19937_64& rng, std::size_t rows,
                                      std::size_t cols,
                                      double cond_bound = 1e6) {
  for (;;) {
    lsid::Mat a = random_mat(rng, rows, cols);
    if (gram_cond(a) <= cond_bound) return a;
  }
}

// Square matrix whose LU pivot ratio stays below the cutoff, so FD lemma
// checks are not dominated by floating-point noise.
inline lsid::Mat well_conditioned_square(std::mt19937_64& rng, std::size_t d,
                                         double pivot_ratio_cutoff = 1e8) {
  for (;;) {
    lsid::Mat a = random_mat(rng, d, d);
    const lsid::LuFactors f = lsid::lu_decompose(a);
    if (f.singular) continue;
    double lo = std::fabs(f.lu(0, 0)), hi = lo;
    for (std::size_t i = 1; i < d; ++i) {
      const double p = std::fabs(f.lu(i, i));
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    if (hi / lo <= pivot_ratio_cutoff) return a;
  }
}

}  // namespace lsid_test
