#pragma once

#include <cstddef>
#include <vector>

#include "lsid/errors.hpp"

namespace lsid {

/// Dense real matrix, row-major. Entries are validated finite at
/// construction; dimensions are immutable after construction.
class Mat {
 public:
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::size_t rows, std::size_t cols, std::vector<double> data);
  Mat(std::initializer_list<std::initializer_list<double>> rows);

  static Mat identity(std::size_t d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool same_shape(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// Dense real column vector.
class Vec {
 public:
  explicit Vec(std::size_t len);
  explicit Vec(std::vector<double> data);
  Vec(std::initializer_list<double> data);

  std::size_t len() const { return data_.size(); }

  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  std::vector<double> data_;
};

double max_abs(const Mat& m);
double max_abs(const Vec& v);
double norm_l2(const Vec& v);

bool operator==(const Mat& a, const Mat& b);
bool operator==(const Vec& a, const Vec& b);

}  // namespace lsid
