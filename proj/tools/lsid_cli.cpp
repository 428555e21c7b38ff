// lsid: least-squares solver with a determinant-weighted subset route,
// an identity/lemma verification suite, and a two-route benchmark.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lsid/calculus.hpp"
#include "lsid/dense.hpp"
#include "lsid/errors.hpp"
#include "lsid/identity.hpp"
#include "lsid/io.hpp"
#include "lsid/mc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitIoError = 2;
constexpr int kExitRankDeficient = 3;
constexpr int kExitCapExceeded = 4;

using Clock = std::chrono::steady_clock;

double elapsed_ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::uint64_t subset_cap_from_env() {
  if (const char* env = std::getenv("LSID_SUBSET_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed LSID_SUBSET_CAP='" << env
              << "'\n";
  }
  return lsid::kDefaultSubsetCap;
}

void emit_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw lsid::FileError("cannot write file: " + out_path);
  out << text << '\n';
}

double linf_diff(const lsid::Vec& a, const lsid::Vec& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.len(); ++i) {
    d = std::max(d, std::fabs(a[i] - b[i]));
  }
  return d;
}

double residual_l2(const lsid::Mat& a, const lsid::Vec& x,
                   const lsid::Vec& b) {
  const lsid::Vec ax = lsid::matvec(a, x);
  double s = 0.0;
  for (std::size_t i = 0; i < b.len(); ++i) {
    const double r = ax[i] - b[i];
    s += r * r;
  }
  return std::sqrt(s);
}

struct SolveArgs {
  std::string matrix_path;
  std::string rhs_path;
  std::string method = "subset";
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  double tol = lsid::kNumTol;
  std::string out_path;
  bool deterministic = true;
};

int run_solve(const SolveArgs& args) {
  const auto start = Clock::now();
  const std::uint64_t cap = subset_cap_from_env();
  const lsid::ProblemInstance inst =
      lsid::read_problem(args.matrix_path, args.rhs_path);

  lsid::Report report;
  report.method = args.method;
  report.det_gram =
      lsid::det(lsid::matmul(lsid::transpose(inst.a), inst.a));

  bool discrepancy_failed = false;

  if (args.method == "pseudo") {
    const lsid::Vec x = lsid::pseudo_inverse_solve(inst.a, inst.b);
    report.solution = x;
    report.residual_l2 = residual_l2(inst.a, x, inst.b);
  } else if (args.method == "subset") {
    const lsid::WeightedSolveResult r =
        lsid::det_weighted_solution(inst.a, inst.b, cap);
    const lsid::Vec baseline = lsid::pseudo_inverse_solve(inst.a, inst.b);
    report.solution = r.solution;
    report.residual_l2 = residual_l2(inst.a, r.solution, inst.b);
    report.subsets_total = r.subsets_total;
    report.subsets_singular = r.subsets_singular;
    report.cross_route_discrepancy = linf_diff(r.solution, baseline);
    if (*report.cross_route_discrepancy >
        args.tol * (1.0 + lsid::max_abs(baseline))) {
      discrepancy_failed = true;
    }
  } else if (args.method == "monte-carlo") {
    const lsid::McConfig cfg{args.samples, args.seed, 0};
    const lsid::WeightedSolveResult r = lsid::mc_solution(inst.a, inst.b, cfg);
    report.solution = r.solution;
    report.residual_l2 = residual_l2(inst.a, r.solution, inst.b);
    report.subsets_total = r.subsets_total;
    report.subsets_singular = r.subsets_singular;
    report.samples = args.samples;
    report.seed = args.seed;
  } else {
    std::cerr << "error: unknown method '" << args.method << "'\n";
    return kExitIoError;
  }

  report.elapsed_ms = elapsed_ms_since(start);
  emit_output(lsid::report_to_json(report), args.out_path);

  if (discrepancy_failed) {
    std::cerr << "error: subset route disagrees with the QR baseline by "
              << lsid::format_double(*report.cross_route_discrepancy)
              << " (tol " << lsid::format_double(args.tol) << ")\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string matrix_path;
  std::string checks = "identity,cauchy-binet,lemmas";
  double tol = lsid::kNumTol;
  double fd_tol = lsid::kFdTol;
  std::string out_path;
};

std::set<std::string> parse_checks(const std::string& csv) {
  std::set<std::string> checks;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "identity" && item != "cauchy-binet" && item != "lemmas") {
      throw CLI::ValidationError("--checks",
                                 "unknown check '" + item + "'");
    }
    checks.insert(item);
  }
  if (checks.empty()) {
    throw CLI::ValidationError("--checks", "no checks selected");
  }
  return checks;
}

int run_verify(const VerifyArgs& args) {
  const auto start = Clock::now();
  const std::uint64_t cap = subset_cap_from_env();
  const std::set<std::string> checks = parse_checks(args.checks);
  const lsid::Mat a = lsid::read_matrix_csv(args.matrix_path);
  if (a.rows() < a.cols()) {
    std::cerr << "error: matrix must have rows >= cols\n";
    return kExitIoError;
  }

  lsid::Report report;
  report.method = "verify";
  report.det_gram = lsid::det(lsid::matmul(lsid::transpose(a), a));

  bool all_passed = true;

  if (checks.count("identity")) {
    const lsid::IdentityReport ir = lsid::verify_identity(a, args.tol, cap);
    report.max_identity_diff = ir.max_abs_diff;
    report.f_value = ir.f_value;
    if (!ir.passed) {
      all_passed = false;
      std::cerr << "FAIL identity: max |lhs-rhs| = "
                << lsid::format_double(ir.max_abs_diff) << ", |f(A)| = "
                << lsid::format_double(std::fabs(ir.f_value)) << "\n";
    }
  }

  if (checks.count("cauchy-binet")) {
    const double f = lsid::cauchy_binet_f(a, cap);
    report.f_value = f;
    const double bound = args.tol * (1.0 + std::fabs(*report.det_gram));
    if (std::fabs(f) > bound) {
      all_passed = false;
      std::cerr << "FAIL cauchy-binet: |f(A)| = "
                << lsid::format_double(std::fabs(f)) << " exceeds "
                << lsid::format_double(bound) << "\n";
    }
  }

  if (checks.count("lemmas")) {
    // lemma checks need a square matrix; a non-square input is replaced by
    // its Gram matrix
    lsid::Mat square = a;
    if (a.rows() != a.cols()) {
      square = lsid::matmul(lsid::transpose(a), a);
      std::cerr << "note: lemma checks run on the Gram matrix A^tA ("
                << square.rows() << "x" << square.cols() << ")\n";
    }

    double worst_fd = 0.0;
    for (std::size_t i = 0; i < square.rows(); ++i) {
      for (std::size_t j = 0; j < square.cols(); ++j) {
        const auto det_check =
            lsid::check_det_derivative(square, i, j, args.fd_tol);
        const auto inv_check =
            lsid::check_inverse_derivative(square, i, j, args.fd_tol);
        worst_fd = std::max({worst_fd, det_check.max_rel_err,
                             inv_check.max_rel_err});
        if (!det_check.passed || !inv_check.passed) all_passed = false;
      }
    }
    if (worst_fd > args.fd_tol) {
      std::cerr << "FAIL lemmas: worst FD relative error "
                << lsid::format_double(worst_fd) << " exceeds "
                << lsid::format_double(args.fd_tol) << "\n";
    }

    const lsid::Mat sym = lsid::matmul(lsid::transpose(square), square);
    const auto trace_check = lsid::check_trace_symmetry(sym, square);
    if (!trace_check.passed) {
      all_passed = false;
      std::cerr << "FAIL lemmas: trace symmetry error "
                << lsid::format_double(trace_check.max_rel_err) << "\n";
    }

    if (!lsid::check_inner_product_separation(a)) {
      all_passed = false;
      std::cerr << "FAIL lemmas: inner-product basis reconstruction\n";
    }
  }

  report.elapsed_ms = elapsed_ms_since(start);
  emit_output(lsid::report_to_json(report), args.out_path);
  return all_passed ? kExitOk : kExitCheckFailed;
}

struct BenchArgs {
  std::size_t m = 10;
  std::size_t n = 3;
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  std::string out_path;
};

lsid::Mat random_matrix(std::size_t rows, std::size_t cols,
                        lsid::SplitMix64& rng) {
  lsid::Mat m(rows, cols);
  for (double& x : m.data()) {
    x = 2.0 * (static_cast<double>(rng.next() >> 11) * 0x1.0p-53) - 1.0;
  }
  return m;
}

lsid::Vec random_vector(std::size_t len, lsid::SplitMix64& rng) {
  lsid::Vec v(len);
  for (double& x : v.data()) {
    x = 2.0 * (static_cast<double>(rng.next() >> 11) * 0x1.0p-53) - 1.0;
  }
  return v;
}

int run_bench(const BenchArgs& args) {
  const std::uint64_t cap = subset_cap_from_env();
  lsid::require_under_cap(args.m, args.n, cap);

  std::ostringstream out;
  out << "m,n,trial,route,elapsed_ns,discrepancy,f_value\n";

  for (std::size_t trial = 0; trial < args.trials; ++trial) {
    lsid::SplitMix64 rng(args.seed + trial);
    lsid::Mat a = random_matrix(args.m, args.n, rng);
    lsid::Vec b = random_vector(args.m, rng);

    const auto t0 = Clock::now();
    const lsid::Vec x_pseudo = lsid::pseudo_inverse_solve(a, b);
    const auto t1 = Clock::now();
    const lsid::WeightedSolveResult r = lsid::det_weighted_solution(a, b, cap);
    const auto t2 = Clock::now();

    const double disc = linf_diff(r.solution, x_pseudo);
    const double f = lsid::cauchy_binet_f(a, cap);

    const auto ns = [](Clock::time_point lo, Clock::time_point hi) {
      return std::chrono::duration_cast<std::chrono::nanoseconds>(hi - lo)
          .count();
    };
    out << args.m << ',' << args.n << ',' << trial << ",pseudo,"
        << ns(t0, t1) << ',' << lsid::format_double(disc) << ','
        << lsid::format_double(f) << '\n';
    out << args.m << ',' << args.n << ',' << trial << ",subset,"
        << ns(t1, t2) << ',' << lsid::format_double(disc) << ','
        << lsid::format_double(f) << '\n';
  }

  if (args.out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(args.out_path);
    if (!f) throw lsid::FileError("cannot write file: " + args.out_path);
    f << out.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Least-squares solver: QR pseudo-inverse baseline, exact "
      "determinant-squared-weighted subset route, and Monte-Carlo subset "
      "sampling, with identity and lemma verification."};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve an overdetermined instance read from CSV files");
  solve->add_option("--matrix", solve_args.matrix_path, "matrix CSV")
      ->required();
  solve->add_option("--rhs", solve_args.rhs_path, "right-hand side CSV")
      ->required();
  solve->add_option("--method", solve_args.method,
                    "pseudo | subset | monte-carlo");
  solve->add_option("--samples", solve_args.samples,
                    "Monte-Carlo sample count");
  solve->add_option("--seed", solve_args.seed, "Monte-Carlo seed");
  solve->add_option("--tol", solve_args.tol,
                    "cross-route discrepancy tolerance");
  solve->add_option("--out", solve_args.out_path,
                    "report file (default: stdout)");
  solve->add_flag("--deterministic,!--no-deterministic",
                  solve_args.deterministic,
                  "lexicographic sequential accumulation (default on)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Verify the matrix identity, Cauchy-Binet, and lemma checks");
  verify->add_option("--matrix", verify_args.matrix_path, "matrix CSV")
      ->required();
  verify->add_option("--checks", verify_args.checks,
                     "comma list of identity,cauchy-binet,lemmas");
  verify->add_option("--tol", verify_args.tol,
                     "identity / Cauchy-Binet tolerance");
  verify->add_option("--fd-tol", verify_args.fd_tol,
                     "finite-difference lemma tolerance");
  verify->add_option("--out", verify_args.out_path,
                     "report file (default: stdout)");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "bench", "Time both routes on random instances, CSV to stdout");
  bench->add_option("--m", bench_args.m, "row count")->required();
  bench->add_option("--n", bench_args.n, "column count")->required();
  bench->add_option("--trials", bench_args.trials, "number of instances");
  bench->add_option("--seed", bench_args.seed, "instance seed");
  bench->add_option("--out", bench_args.out_path,
                    "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitIoError;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const lsid::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const lsid::RankDeficientError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRankDeficient;
  } catch (const lsid::CsvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const lsid::FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const lsid::DimensionMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitOk;
}
