#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "kfk/phi_distribution.hpp"
#include "kfk/representability.hpp"
#include "oracle.hpp"

using namespace kfk;

TEST_CASE("CDF at x = 10") {
  const GridPoint grid[] = {{0, 1}, {1, 2}, {1, 1}};
  const auto cdf = empirical_cdf(10, grid);
  CHECK(cdf.value(0) == 0.0);
  CHECK(cdf.value(1) == 0.5);
  CHECK(cdf.value(2) == 1.0);
}

TEST_CASE("CDF against a direct count") {
  const std::uint64_t x = 3000;
  const auto grid = uniform_grid(60);
  const auto phi = tabulate(FunctionKind::phi, {1, x + 1});
  const auto cdf = empirical_cdf(phi, x, grid, {.worker_count = 4});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= x; ++k) count += oracle::phi(k) * grid[i].den <= grid[i].num * k;
    REQUIRE(cdf.counts[i] == count);
  }
  CHECK(cdf.counts == empirical_cdf_reference(phi, x, grid).counts);
  CHECK(std::is_sorted(cdf.counts.begin(), cdf.counts.end()));
}

TEST_CASE("grid validation") {
  const GridPoint unsorted[] = {{1, 2}, {1, 3}};
  const GridPoint outside[] = {{3, 2}};
  CHECK_THROWS_AS(empirical_cdf(10, unsorted), std::invalid_argument);
  CHECK_THROWS_AS(empirical_cdf(10, outside), std::invalid_argument);
  CHECK_THROWS_AS(empirical_cdf(10, std::span<const GridPoint>{}), std::invalid_argument);
  CHECK_THROWS_AS(uniform_grid(0), std::invalid_argument);
  CHECK_THROWS_AS(integral_bound(10, 9), std::invalid_argument);
}

TEST_CASE("integral bracket") {
  for (const std::uint64_t g : {10ULL, 100ULL, 1000ULL}) {
    const auto b = integral_bound(20'000, g);
    CHECK(b.lower <= b.upper);
    CHECK(b.upper - b.lower <= 2.0 / static_cast<double>(g));
    CHECK(b.bound() == doctest::Approx(0.5 + b.upper));
  }
  const auto b = integral_bound(100'000, 1000);
  CHECK(b.upper < 0.17);
  CHECK(b.bound() < 0.67);
  CHECK(b.g == 1000);
}

TEST_CASE("CDF is stable in x on ten points") {
  // On fine grids the gap just below lambda = 1/2 and lambda = 1 is carried by k = p and
  // k = 2p with p prime, which shrinks only like 1 / log x.
  const auto grid = uniform_grid(10);
  const auto small = empirical_cdf(100'000, grid);
  const auto large = empirical_cdf(1'000'000, grid);
  double worst = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(small.value(i) - large.value(i)));
  CHECK(worst <= 0.01);
}

TEST_CASE("partition bound") {
  const auto p = partition_lower_bound(10, 2);
  CHECK(p.partition_sum == 1);
  CHECK(p.exceed_count == 4);
  CHECK(p.direct_count == count_image(tabulate(FunctionKind::phi, {1, 11}), 10).non_representable());

  // nu >= 1 everywhere, and phi(k)/k > 1 never holds.
  const GridPoint low[] = {{1, 4}, {1, 2}};
  CHECK(partition_lower_bound(10, low).partition_sum == 0);

  for (const std::uint64_t x : {100ULL, 10'000ULL, 200'000ULL}) {
    for (const std::uint64_t r : {2ULL, 10ULL, 100ULL}) {
      const auto q = partition_lower_bound(x, r);
      CHECK(q.partition_sum <= q.exceed_count);
      CHECK(q.exceed_count <= q.direct_count);
    }
  }
  CHECK_THROWS_AS(partition_lower_bound(10, 1), std::invalid_argument);
  const GridPoint bad[] = {{1, 2}, {1, 1}};
  CHECK_THROWS_AS(partition_lower_bound(10, bad), std::invalid_argument);
}
