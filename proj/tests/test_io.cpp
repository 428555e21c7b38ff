#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "lsid/errors.hpp"
#include "lsid/io.hpp"
#include "test_util.hpp"

using namespace lsid;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempFile {
  fs::path path;

  explicit TempFile(const std::string& contents = "") {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("lsid_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++) + ".csv");
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
};

}  // namespace

TEST_CASE("read_matrix_csv") {
  const TempFile ok("1,0\n0,1\n1,1\n");
  const Mat m = read_matrix_csv(ok.path.string());
  CHECK(m == Mat{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}});

  const TempFile sci("1e3,-2.5\n0,4\n");
  CHECK(read_matrix_csv(sci.path.string()) ==
        Mat{{1000.0, -2.5}, {0.0, 4.0}});

  const TempFile ragged("1,2\n3\n");
  CHECK_THROWS_AS(read_matrix_csv(ragged.path.string()), CsvError);
  try {
    read_matrix_csv(ragged.path.string());
  } catch (const CsvError& e) {
    CHECK(e.line == 2);
  }

  const TempFile empty("");
  CHECK_THROWS_AS(read_matrix_csv(empty.path.string()), CsvError);

  const TempFile bad("1,abc\n");
  CHECK_THROWS_AS(read_matrix_csv(bad.path.string()), CsvError);

  CHECK_THROWS_AS(read_matrix_csv("/nonexistent/lsid.csv"), FileError);
}

TEST_CASE("read_vector_csv") {
  const TempFile ok("1\n2\n3\n");
  CHECK(read_vector_csv(ok.path.string()) == Vec{1.0, 2.0, 3.0});

  const TempFile empty("");
  CHECK_THROWS_AS(read_vector_csv(empty.path.string()), CsvError);

  const TempFile multi("1,2\n");
  CHECK_THROWS_AS(read_vector_csv(multi.path.string()), CsvError);
}

TEST_CASE("matrix CSV round-trip is bitwise exact") {
  std::mt19937_64 rng(41);
  const Mat m = lsid_test::random_mat(rng, 5, 4, -1e6, 1e6);

  const TempFile out;
  write_matrix_csv(m, out.path.string());
  CHECK(read_matrix_csv(out.path.string()) == m);
}

TEST_CASE("report JSON matches the shipped schema") {
  Report solve_report;
  solve_report.method = "subset";
  solve_report.solution = Vec{1.0, 2.0};
  solve_report.residual_l2 = 0.0;
  solve_report.det_gram = 3.0;
  solve_report.subsets_total = 3;
  solve_report.subsets_singular = 0;
  solve_report.cross_route_discrepancy = 0.0;
  solve_report.elapsed_ms = 1.5;

  const json parsed = json::parse(report_to_json(solve_report));

  const json schema = [] {
    std::ifstream in(std::string(LSID_SOURCE_DIR) +
                     "/schema/report.schema.json");
    REQUIRE(in);
    return json::parse(in);
  }();

  // every required key is present, nothing extra is emitted
  for (const auto& key : schema.at("required")) {
    CHECK(parsed.contains(key.get<std::string>()));
  }
  for (const auto& [key, value] : parsed.items()) {
    CHECK(schema.at("properties").contains(key));
  }

  CHECK(parsed.at("method") == "subset");
  CHECK(parsed.at("solution") == json::array({1.0, 2.0}));
  CHECK(parsed.at("max_identity_diff").is_null());
  CHECK(parsed.at("samples").is_null());

  // verify-shaped report: null solution, identity fields set
  Report verify_report;
  verify_report.method = "verify";
  verify_report.max_identity_diff = 0.0;
  verify_report.f_value = 0.0;
  const json vj = json::parse(report_to_json(verify_report));
  CHECK(vj.at("solution").is_null());
  CHECK(vj.at("max_identity_diff") == 0.0);

  // monte-carlo-shaped report: samples and seed populated
  Report mc_report;
  mc_report.method = "monte-carlo";
  mc_report.solution = Vec{1.0};
  mc_report.samples = 1000;
  mc_report.seed = 42;
  const json mj = json::parse(report_to_json(mc_report));
  CHECK(mj.at("samples") == 1000);
  CHECK(mj.at("seed") == 42);
}

TEST_CASE("17-digit doubles survive the JSON round trip") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const double x = dist(rng);
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("read_problem validates shape") {
  const TempFile a("1,0\n0,1\n1,1\n");
  const TempFile b("1\n2\n3\n");
  const ProblemInstance inst =
      read_problem(a.path.string(), b.path.string());
  CHECK(inst.a.rows() == 3);
  CHECK(inst.b.len() == 3);

  const TempFile short_b("1\n2\n");
  CHECK_THROWS_AS(read_problem(a.path.string(), short_b.path.string()),
                  DimensionMismatchError);

  const TempFile wide("1,2,3\n4,5,6\n");
  CHECK_THROWS_AS(read_problem(wide.path.string(), short_b.path.string()),
                  DimensionMismatchError);
}
