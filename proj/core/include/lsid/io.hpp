#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lsid/types.hpp"

namespace lsid {

/// One (A, b) pair read from disk.
struct ProblemInstance {
  Mat a;
  Vec b;
  std::string matrix_path;
  std::string rhs_path;
};

/// Headerless rectangular CSV, one matrix row per line, '.' decimal point.
Mat read_matrix_csv(const std::string& path);

/// One numeric value per line.
Vec read_vector_csv(const std::string& path);

ProblemInstance read_problem(const std::string& matrix_path,
                             const std::string& rhs_path);

/// Emits CSV with 17 significant digits so a re-read reproduces the exact
/// doubles.
void write_matrix_csv(const Mat& m, const std::string& path);

/// Report emitted by the CLI; nullable fields are absent-by-meaning, not by
/// accident (e.g. a pseudo-inverse solve has no subset counts to report).
struct Report {
  std::string method;  // "pseudo", "subset", "monte-carlo", "verify"
  std::optional<Vec> solution;
  std::optional<double> residual_l2;
  std::optional<double> det_gram;
  std::optional<std::uint64_t> subsets_total;
  std::optional<std::uint64_t> subsets_singular;
  std::optional<double> max_identity_diff;
  std::optional<double> f_value;
  std::optional<double> cross_route_discrepancy;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  double elapsed_ms = 0.0;
};

/// JSON serialization with 17-significant-digit numbers; schema shipped in
/// schema/report.schema.json.
std::string report_to_json(const Report& report);

void write_report_json(const Report& report, const std::string& path);

/// 17-significant-digit decimal form of a double, round-trip exact.
std::string format_double(double x);

}  // namespace lsid
