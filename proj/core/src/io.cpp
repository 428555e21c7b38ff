#include "lsid/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "lsid/errors.hpp"

namespace lsid {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // ignore a single trailing blank line
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

double parse_field(const std::string& field, std::size_t line,
                   std::size_t column) {
  std::size_t begin = 0, end = field.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(field[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(field[end - 1])))
    --end;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data() + begin, field.data() + end, value);
  if (ec != std::errc{} || ptr != field.data() + end || begin == end) {
    throw CsvError("parse error at line " + std::to_string(line) +
                       ", column " + std::to_string(column) + ": '" + field +
                       "'",
                   line, column);
  }
  return value;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

Mat read_matrix_csv(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) throw CsvError("empty file: " + path);

  std::vector<double> data;
  std::size_t cols = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i]);
    if (i == 0) {
      cols = fields.size();
    } else if (fields.size() != cols) {
      throw CsvError("ragged rows: line " + std::to_string(i + 1) + " has " +
                         std::to_string(fields.size()) + " fields, expected " +
                         std::to_string(cols),
                     i + 1);
    }
    for (std::size_t j = 0; j < fields.size(); ++j) {
      data.push_back(parse_field(fields[j], i + 1, j + 1));
    }
  }
  return Mat(lines.size(), cols, std::move(data));
}

Vec read_vector_csv(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) throw CsvError("empty file: " + path);

  std::vector<double> data;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find(',') != std::string::npos) {
      throw CsvError("vector file has multiple columns at line " +
                         std::to_string(i + 1),
                     i + 1);
    }
    data.push_back(parse_field(lines[i], i + 1, 1));
  }
  return Vec(std::move(data));
}

ProblemInstance read_problem(const std::string& matrix_path,
                             const std::string& rhs_path) {
  Mat a = read_matrix_csv(matrix_path);
  Vec b = read_vector_csv(rhs_path);
  if (a.rows() != b.len()) {
    throw DimensionMismatchError("matrix has " + std::to_string(a.rows()) +
                                 " rows but rhs has " +
                                 std::to_string(b.len()) + " entries");
  }
  if (a.rows() < a.cols()) {
    throw DimensionMismatchError("matrix must have rows >= cols");
  }
  return {std::move(a), std::move(b), matrix_path, rhs_path};
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_matrix_csv(const Mat& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write file: " + path);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
  if (!out) throw FileError("write failed: " + path);
}

namespace {

void emit(std::ostream& out, const char* key, const std::optional<double>& v,
          bool& first) {
  if (!first) out << ",";
  first = false;
  out << "\"" << key << "\":";
  if (v) {
    out << format_double(*v);
  } else {
    out << "null";
  }
}

void emit(std::ostream& out, const char* key,
          const std::optional<std::uint64_t>& v, bool& first) {
  if (!first) out << ",";
  first = false;
  out << "\"" << key << "\":";
  if (v) {
    out << *v;
  } else {
    out << "null";
  }
}

}  // namespace

std::string report_to_json(const Report& report) {
  std::ostringstream out;
  out << "{\"method\":\"" << report.method << "\",";
  out << "\"solution\":";
  if (report.solution) {
    out << "[";
    for (std::size_t i = 0; i < report.solution->len(); ++i) {
      if (i) out << ",";
      out << format_double((*report.solution)[i]);
    }
    out << "]";
  } else {
    out << "null";
  }
  bool first = false;
  emit(out, "residual_l2", report.residual_l2, first);
  emit(out, "det_gram", report.det_gram, first);
  emit(out, "subsets_total", report.subsets_total, first);
  emit(out, "subsets_singular", report.subsets_singular, first);
  emit(out, "max_identity_diff", report.max_identity_diff, first);
  emit(out, "f_value", report.f_value, first);
  emit(out, "cross_route_discrepancy", report.cross_route_discrepancy, first);
  emit(out, "samples", report.samples, first);
  emit(out, "seed", report.seed, first);
  emit(out, "elapsed_ms", std::optional<double>(report.elapsed_ms), first);
  out << "}";
  return out.str();
}

void write_report_json(const Report& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write file: " + path);
  out << report_to_json(report) << '\n';
  if (!out) throw FileError("write failed: " + path);
}

}  // namespace lsid
