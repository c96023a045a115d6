#include <doctest.h>

#include <cstdlib>

#include "sphereavg/sphere_counts.hpp"
#include "support/oracles.hpp"

using namespace sphereavg;

TEST_CASE("table matches direct ball enumeration for small dimensions") {
  for (int n = 1; n <= 4; ++n) {
    const auto table = rep_count_table(n, 50);
    const auto tally = oracle::sphere_count_tally(n, 50);
    for (int64_t lam = 0; lam <= 50; ++lam)
      CHECK(table.counts[lam] == static_cast<uint128>(tally[lam]));
  }
}

TEST_CASE("table basics: origin, first shell, parity, positivity") {
  for (int n : {1, 2, 4, 5, 6}) {
    const auto table = rep_count_table(n, 200);
    CHECK(table.counts[0] == 1);
    CHECK(table.counts[1] == static_cast<uint128>(2 * n));
    for (int64_t lam = 1; lam <= 200; ++lam) {
      CHECK(table.counts[lam] % 2 == 0);  // sign-flip involution
      if (n >= 4) CHECK(table.counts[lam] >= 1);  // four-square positivity
    }
  }
}

TEST_CASE("the n=4 pinned column") {
  const auto table = rep_count_table(4, 4);
  CHECK(table.counts == std::vector<uint128>{1, 8, 24, 32, 24});
  // r_4(4^k) = 24 for k >= 1.
  for (int64_t lam : {4LL, 16LL, 64LL, 256LL, 1024LL})
    CHECK(rep_count_single(4, lam) == 24);
}

TEST_CASE("pinned single counts") {
  CHECK(rep_count_single(5, 0) == 1);
  CHECK(rep_count_single(4, 16) == 24);
  CHECK(rep_count_single(5, 1) == 10);
  CHECK(rep_count_single(5, 5) == 112);
  CHECK(oracle::sphere_count(5, 5) == 112);
  const auto table = rep_count_table(5, 5);
  CHECK(table.counts[5] == 112);
}

TEST_CASE("single vs table vs enumeration over a sweep") {
  for (int n : {4, 5, 6}) {
    const auto table = rep_count_table(n, 60);
    for (int64_t lam = 0; lam <= 60; ++lam) {
      CHECK(rep_count_single(n, lam) == table.counts[lam]);
      CHECK(enumerate_sphere(n, lam).size() ==
            static_cast<size_t>(table.counts[lam]));
    }
  }
}

TEST_CASE("dimension recurrence r_n(l) = sum_j r_{n-1}(l - j^2)") {
  const int64_t max_lambda = 500;
  for (int n = 2; n <= 6; ++n) {
    const auto low = rep_count_table(n - 1, max_lambda);
    const auto cur = rep_count_table(n, max_lambda);
    for (int64_t lam = 0; lam <= max_lambda; ++lam) {
      uint128 sum = low.counts[lam];
      for (int64_t j = 1; j * j <= lam; ++j) sum += 2 * low.counts[lam - j * j];
      CHECK(cur.counts[lam] == sum);
    }
  }
}

TEST_CASE("ball count identity") {
  for (int n = 1; n <= 4; ++n) {
    const auto table = rep_count_table(n, 50);
    uint128 ball = 0;
    for (uint128 c : table.counts) ball += c;
    CHECK(ball == static_cast<uint128>(oracle::ball_count(n, 50)));
  }
}

TEST_CASE("jacobi divisor formula") {
  CHECK(jacobi_four_square(1) == 8);
  CHECK(jacobi_four_square(2) == 24);
  CHECK(jacobi_four_square(4) == 24);
  for (int64_t lam = 1; lam <= 1000; ++lam)
    CHECK(jacobi_four_square(lam) == rep_count_single(4, lam));
  CHECK_THROWS_AS(jacobi_four_square(0), std::invalid_argument);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(rep_count_table(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(rep_count_table(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(rep_count_single(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_sphere(2, -3), std::invalid_argument);
}

TEST_CASE("enumeration is lexicographic and budget-capped") {
  const auto points = enumerate_sphere(5, 1);
  REQUIRE(points.size() == 10);
  CHECK(points.front().coordinates == std::vector<int64_t>{-1, 0, 0, 0, 0});
  CHECK(points.back().coordinates == std::vector<int64_t>{1, 0, 0, 0, 0});
  for (size_t i = 1; i < points.size(); ++i)
    CHECK(points[i - 1].coordinates < points[i].coordinates);
  const auto expected = oracle::sphere_points(5, 1);
  for (size_t i = 0; i < points.size(); ++i)
    CHECK(points[i].coordinates == expected[i]);

  CHECK(enumerate_sphere(5, 0).size() == 1);
  CHECK(enumerate_sphere(5, 0).front().coordinates ==
        std::vector<int64_t>(5, 0));

  // lambda = 4, n = 4: eight (+-2) axis points and sixteen (+-1,...) points.
  const auto shell = enumerate_sphere(4, 4);
  REQUIRE(shell.size() == 24);
  int axis = 0, diagonal = 0;
  for (const auto& p : shell) {
    int nonzero = 0;
    for (int64_t c : p.coordinates) nonzero += c != 0;
    if (nonzero == 1)
      ++axis;
    else if (nonzero == 4)
      ++diagonal;
  }
  CHECK(axis == 8);
  CHECK(diagonal == 16);
}

TEST_CASE("ratio statistics") {
  const auto single = rep_count_table(5, 1);
  const auto stats = asymptotic_ratio_stats(single, 1);
  CHECK(stats.min_ratio == 10.0);
  CHECK(stats.max_ratio == 10.0);
  CHECK(stats.argmin == 1);
  CHECK(stats.argmax == 1);

  // n = 4: the lower constant degenerates along powers of four,
  // r(4^k)/4^k = 24/4^k.
  const auto quad = rep_count_table(4, 4096);
  const auto qstats = asymptotic_ratio_stats(quad, 1);
  CHECK(qstats.argmin == 4096);
  CHECK(qstats.min_ratio == doctest::Approx(24.0 / 4096.0).epsilon(1e-12));

  CHECK_THROWS_AS(asymptotic_ratio_stats(single, 2), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_ratio_stats(single, 0), std::invalid_argument);
}

TEST_CASE("count cache grows lazily and agrees with the table") {
  CountCache cache(5);
  CHECK(cache.count(5) == 112);
  CHECK(cache.count(300) == rep_count_single(5, 300));
  CHECK(cache.count(2) == 40);  // (+-1,+-1,0,0,0) patterns: C(5,2)*4 = 40
}

TEST_CASE("binary count cache round-trips") {
  const auto table = rep_count_table(4, 64);
  const auto path = std::filesystem::temp_directory_path() / "rnsq_test.bin";
  write_count_cache(table, path);
  const auto loaded = read_count_cache(path);
  CHECK(loaded.dimension == 4);
  CHECK(loaded.max_lambda == 64);
  CHECK(loaded.counts == table.counts);
  std::filesystem::remove(path);
}
