#include "lsid/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lsid {

namespace {

void require_finite(const std::vector<double>& data, const char* what) {
  for (double x : data) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(what) +
                                  ": non-finite entry rejected");
    }
  }
}

}  // namespace

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("Mat: dimensions must be positive");
  }
}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("Mat: dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw DimensionMismatchError("Mat: data length != rows*cols");
  }
  require_finite(data_, "Mat");
}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("Mat: dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionMismatchError("Mat: ragged initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require_finite(data_, "Mat");
}

Mat Mat::identity(std::size_t d) {
  Mat m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

Vec::Vec(std::size_t len) : data_(len, 0.0) {
  if (len == 0) throw std::invalid_argument("Vec: length must be positive");
}

Vec::Vec(std::vector<double> data) : data_(std::move(data)) {
  if (data_.empty()) {
    throw std::invalid_argument("Vec: length must be positive");
  }
  require_finite(data_, "Vec");
}

Vec::Vec(std::initializer_list<double> data)
    : Vec(std::vector<double>(data)) {}

double max_abs(const Mat& m) {
  double r = 0.0;
  for (double x : m.data()) r = std::max(r, std::fabs(x));
  return r;
}

double max_abs(const Vec& v) {
  double r = 0.0;
  for (double x : v.data()) r = std::max(r, std::fabs(x));
  return r;
}

double norm_l2(const Vec& v) {
  double s = 0.0;
  for (double x : v.data()) s += x * x;
  return std::sqrt(s);
}

bool operator==(const Mat& a, const Mat& b) {
  return a.same_shape(b) && a.data() == b.data();
}

bool operator==(const Vec& a, const Vec& b) { return a.data() == b.data(); }

}  // namespace lsid
