#include <doctest.h>

#include <random>

#include "lsid/dense.hpp"
#include "lsid/errors.hpp"
#include "lsid/subset.hpp"
#include "test_util.hpp"

using namespace lsid;
using lsid_test::random_mat;
using lsid_test::random_vec;

TEST_CASE("combinations enumeration") {
  const auto c32 = all_combinations(3, 2);
  REQUIRE(c32.size() == 3);
  CHECK(c32[0].indices == std::vector<std::size_t>{0, 1});
  CHECK(c32[1].indices == std::vector<std::size_t>{0, 2});
  CHECK(c32[2].indices == std::vector<std::size_t>{1, 2});

  const auto full = all_combinations(4, 4);
  REQUIRE(full.size() == 1);
  CHECK(full[0].indices == std::vector<std::size_t>{0, 1, 2, 3});

  const auto c52 = all_combinations(5, 2);
  CHECK(c52.size() == 10);
  for (std::size_t i = 1; i < c52.size(); ++i) {
    CHECK(c52[i - 1].indices < c52[i].indices);  // lexicographic
  }

  CHECK_THROWS_AS(CombinationStream(3, 0), InvalidRangeError);
  CHECK_THROWS_AS(CombinationStream(3, 4), InvalidRangeError);
}

TEST_CASE("binomial counts match the factorial formula") {
  auto factorial_binomial = [](std::size_t m, std::size_t n) {
    long double r = 1.0L;
    for (std::size_t i = 1; i <= n; ++i) {
      r = r * static_cast<long double>(m - n + i) / static_cast<long double>(i);
    }
    return static_cast<std::uint64_t>(r + 0.5L);
  };
  for (std::size_t m = 1; m <= 20; ++m) {
    for (std::size_t n = 1; n <= m; ++n) {
      CHECK(binomial_capped(m, n, UINT64_MAX - 1) == factorial_binomial(m, n));
    }
  }
  // stream cardinality spot check
  std::size_t count = 0;
  CombinationStream stream(10, 4);
  SubsetIndex p;
  while (stream.next(p)) ++count;
  CHECK(count == 210);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(require_under_cap(40, 20), CapExceededError);
  CHECK(require_under_cap(20, 10) == 184756);
}

TEST_CASE("extract_rows and extract_entries") {
  const Mat a{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  CHECK(extract_rows(a, {{0, 2}, 3}) == Mat{{1.0, 0.0}, {1.0, 1.0}});
  CHECK(extract_rows(a, {{1, 2}, 3}) == Mat{{0.0, 1.0}, {1.0, 1.0}});

  const Mat sq{{1.0, 2.0}, {3.0, 4.0}};
  CHECK(extract_rows(sq, {{0, 1}, 2}) == sq);

  const Vec b{1.0, 2.0, 3.0};
  CHECK(extract_entries(b, {{0, 2}, 3}) == Vec{1.0, 3.0});
  CHECK(extract_entries(b, {{1, 2}, 3}) == Vec{2.0, 3.0});
  CHECK(extract_entries(b, {{0, 1, 2}, 3}) == b);

  CHECK_THROWS_AS(extract_rows(a, {{0, 5}, 6}), DimensionMismatchError);
  CHECK_THROWS_AS(extract_rows(a, {{0, 5}, 3}), IndexOutOfRangeError);
}

TEST_CASE("subset_solution") {
  const Mat a{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  const Vec b{1.0, 2.0, 3.0};

  const SubsetSolution s = subset_solution(a, b, {{1, 2}, 3});
  CHECK(s.det_ap == -1.0);
  REQUIRE(s.x_p.has_value());
  CHECK(*s.x_p == Vec{1.0, 2.0});

  // zero row: singular subsystem is a zero-weight record, not an error
  const SubsetSolution zero =
      subset_solution(Mat{{1.0}, {0.0}}, Vec{7.0, 9.0}, {{1}, 2});
  CHECK(zero.det_ap == 0.0);
  CHECK_FALSE(zero.x_p.has_value());

  // full square subset reproduces solve_square bitwise
  const Mat sq{{2.0, 1.0}, {1.0, 3.0}};
  const Vec rhs{4.0, 5.0};
  const SubsetSolution full = subset_solution(sq, rhs, {{0, 1}, 2});
  REQUIRE(full.x_p.has_value());
  CHECK(*full.x_p == solve_square(sq, rhs));

  CHECK_THROWS_AS(subset_solution(a, Vec{1.0, 2.0}, {{1, 2}, 3}),
                  DimensionMismatchError);
}

TEST_CASE("embb") {
  const Mat b2{{1.0, 2.0}, {3.0, 4.0}};
  CHECK(embb(b2, {{0, 1}, 2}, 2) == b2);

  CHECK(embb(Mat{{5.0, 6.0}, {7.0, 8.0}}, {{0, 2}, 3}, 3) ==
        Mat{{5.0, 0.0, 6.0}, {7.0, 0.0, 8.0}});

  CHECK(embb(Mat{{-1.0, 1.0}, {1.0, 0.0}}, {{1, 2}, 3}, 3) ==
        Mat{{0.0, -1.0, 1.0}, {0.0, 1.0, 0.0}});

  CHECK_THROWS_AS(embb(Mat{{1.0, 2.0}}, {{0}, 2}, 2), DimensionMismatchError);
}

TEST_CASE("embb properties") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const std::size_t m = 3 + rng() % 5;
    const std::size_t n = 1 + rng() % std::min<std::size_t>(m, 4);
    const Mat b = random_mat(rng, n, n);

    // random subset
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::size_t> idx(all.begin(), all.begin() + n);
    std::sort(idx.begin(), idx.end());
    const SubsetIndex p{idx, m};

    const Mat e = embb(b, p, m);

    // nonzero columns occupy exactly the positions in p
    for (std::size_t j = 0; j < m; ++j) {
      const bool in_p = std::find(idx.begin(), idx.end(), j) != idx.end();
      bool has_nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (e(i, j) != 0.0) has_nonzero = true;
      }
      if (!in_p) CHECK_FALSE(has_nonzero);
    }

    // embb(B,p,m) v == B extract_entries(v,p)
    const Vec v = random_vec(rng, m);
    const Vec lhs = matvec(e, v);
    const Vec rhs = matvec(b, extract_entries(v, p));
    CHECK(lsid_test::linf_diff(lhs, rhs) <= 1e-14);
  }
}
