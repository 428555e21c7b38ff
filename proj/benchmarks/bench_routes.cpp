// Timing comparison of the QR baseline against exact subset enumeration and
// Monte-Carlo sampling at desk-scale sizes.

#include <benchmark/benchmark.h>

#include <random>

#include "lsid/dense.hpp"
#include "lsid/identity.hpp"
#include "lsid/mc.hpp"

namespace {

lsid::Mat random_mat(std::mt19937_64& rng, std::size_t rows,
                     std::size_t cols) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  lsid::Mat m(rows, cols);
  for (double& x : m.data()) x = dist(rng);
  return m;
}

lsid::Vec random_vec(std::mt19937_64& rng, std::size_t len) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  lsid::Vec v(len);
  for (double& x : v.data()) x = dist(rng);
  return v;
}

void BM_PseudoInverse(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const lsid::Mat a = random_mat(rng, m, n);
  const lsid::Vec b = random_vec(rng, m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsid::pseudo_inverse_solve(a, b));
  }
}

void BM_DetWeighted(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const lsid::Mat a = random_mat(rng, m, n);
  const lsid::Vec b = random_vec(rng, m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsid::det_weighted_solution(a, b));
  }
}

void BM_MonteCarlo(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const lsid::Mat a = random_mat(rng, m, n);
  const lsid::Vec b = random_vec(rng, m);
  const lsid::McConfig cfg{static_cast<std::uint64_t>(state.range(2)), 7, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lsid::mc_solution(a, b, cfg));
  }
}

}  // namespace

BENCHMARK(BM_PseudoInverse)->Args({8, 2})->Args({12, 4})->Args({20, 4});
BENCHMARK(BM_DetWeighted)->Args({8, 2})->Args({12, 4})->Args({20, 4});
BENCHMARK(BM_MonteCarlo)->Args({20, 4, 1000})->Args({32, 4, 1000});

BENCHMARK_MAIN();
