#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsid {

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidRangeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankDeficientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AllWeightsZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AllSampledSingularError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSymmetricError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// CSV/file problems. line is 1-based, 0 when not applicable.
struct CsvError : std::runtime_error {
  CsvError(std::string msg, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(std::move(msg)), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lsid
