#include "lsid/subset.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lsid/dense.hpp"
#include "lsid/errors.hpp"

namespace lsid {

void validate(const SubsetIndex& p) {
  if (p.indices.empty() || p.indices.size() > p.m) {
    throw InvalidRangeError("SubsetIndex: size must be in [1, m]");
  }
  std::size_t prev = 0;
  bool first = true;
  for (std::size_t idx : p.indices) {
    if (idx >= p.m) {
      throw IndexOutOfRangeError("SubsetIndex: index out of range");
    }
    if (!first && idx <= prev) {
      throw InvalidRangeError("SubsetIndex: indices must strictly increase");
    }
    prev = idx;
    first = false;
  }
}

std::uint64_t binomial_capped(std::size_t m, std::size_t n,
                              std::uint64_t cap) {
  if (n > m) return 0;
  n = std::min(n, m - n);
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    c = c * (m - n + i) / i;  // exact: product of i consecutive ints
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t require_under_cap(std::size_t m, std::size_t n,
                                std::uint64_t cap) {
  const std::uint64_t c = binomial_capped(m, n, cap);
  if (c > cap) {
    throw CapExceededError(
        "C(" + std::to_string(m) + "," + std::to_string(n) +
        ") exceeds the enumeration cap of " + std::to_string(cap) +
        "; use the Monte-Carlo route (solve --method monte-carlo)");
  }
  return c;
}

CombinationStream::CombinationStream(std::size_t m, std::size_t n)
    : m_(m), n_(n) {
  if (n == 0 || n > m) {
    throw InvalidRangeError("combinations: need 1 <= n <= m");
  }
  reset();
}

void CombinationStream::reset() {
  current_.resize(n_);
  std::iota(current_.begin(), current_.end(), std::size_t{0});
  done_ = false;
  started_ = false;
}

bool CombinationStream::next(SubsetIndex& out) {
  if (done_) return false;
  if (started_) {
    // advance to the lexicographic successor
    std::size_t i = n_;
    while (i-- > 0) {
      if (current_[i] != i + m_ - n_) {
        ++current_[i];
        for (std::size_t j = i + 1; j < n_; ++j) {
          current_[j] = current_[j - 1] + 1;
        }
        break;
      }
      if (i == 0) {
        done_ = true;
        return false;
      }
    }
  }
  started_ = true;
  out.indices = current_;
  out.m = m_;
  return true;
}

std::vector<SubsetIndex> all_combinations(std::size_t m, std::size_t n) {
  require_under_cap(m, n);
  std::vector<SubsetIndex> result;
  CombinationStream stream(m, n);
  SubsetIndex p;
  while (stream.next(p)) result.push_back(p);
  return result;
}

Mat extract_rows(const Mat& a, const SubsetIndex& p) {
  validate(p);
  if (p.m != a.rows()) {
    throw DimensionMismatchError("extract_rows: subset ambient != a.rows");
  }
  Mat sub(p.size(), a.cols());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      sub(i, j) = a(p.indices[i], j);
    }
  }
  return sub;
}

Vec extract_entries(const Vec& b, const SubsetIndex& p) {
  validate(p);
  if (p.m != b.len()) {
    throw DimensionMismatchError("extract_entries: subset ambient != b.len");
  }
  Vec sub(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) sub[i] = b[p.indices[i]];
  return sub;
}

SubsetSolution subset_solution(const Mat& a, const Vec& b,
                               const SubsetIndex& p) {
  if (a.rows() != b.len()) {
    throw DimensionMismatchError("subset_solution: a.rows != b.len");
  }
  if (a.cols() != p.size()) {
    throw DimensionMismatchError("subset_solution: a.cols != |p|");
  }
  const Mat ap = extract_rows(a, p);
  const LuFactors f = lu_decompose(ap);
  SubsetSolution s{p, det(f), std::nullopt};
  if (!f.singular) {
    s.x_p = lu_solve(f, extract_entries(b, p));
  }
  return s;
}

Mat embb(const Mat& b, const SubsetIndex& p, std::size_t m) {
  if (b.rows() != b.cols()) {
    throw DimensionMismatchError("embb: B must be square");
  }
  if (p.size() != b.rows() || p.m != m) {
    throw DimensionMismatchError("embb: |p| != n or ambient mismatch");
  }
  validate(p);
  Mat out(b.rows(), m);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      out(i, p.indices[k]) = b(i, k);
    }
  }
  return out;
}

}  // namespace lsid
