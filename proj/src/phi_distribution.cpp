#include "kfk/phi_distribution.hpp"

#include <algorithm>
#include <stdexcept>

#include "kfk/rational.hpp"
#include "kfk/representability.hpp"

namespace kfk {

namespace {

// a <= b for a, b in lowest or any terms
bool less_equal(const GridPoint& a, const GridPoint& b) {
  return static_cast<u128>(a.num) * b.den <= static_cast<u128>(b.num) * a.den;
}

void check_grid(std::span<const GridPoint> grid) {
  if (grid.empty()) throw std::invalid_argument("grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& g = grid[i];
    if (g.den == 0 || g.num > g.den) {
      throw std::invalid_argument("grid point " + std::to_string(i) + " lies outside [0, 1]");
    }
    if (i > 0 && less_equal(g, grid[i - 1])) {
      throw std::invalid_argument("grid must be strictly ascending");
    }
  }
}

void check_table(const FunctionTable& phi, std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  if (phi.interval().lo != 1 || phi.interval().hi <= x) {
    throw std::invalid_argument("totient table must cover [1, x]");
  }
}

// Index of the first grid point lambda with phi/k <= lambda, or grid.size().
std::size_t first_covering(std::uint64_t phi, std::uint64_t k, std::span<const GridPoint> grid) {
  const auto it = std::partition_point(grid.begin(), grid.end(), [&](const GridPoint& g) {
    return static_cast<u128>(phi) * g.den > static_cast<u128>(g.num) * k;
  });
  return static_cast<std::size_t>(it - grid.begin());
}

EmpiricalCDF accumulate(std::uint64_t x, std::span<const GridPoint> grid, std::vector<std::uint64_t> hits) {
  EmpiricalCDF cdf;
  cdf.x = x;
  cdf.grid.assign(grid.begin(), grid.end());
  cdf.counts.resize(grid.size());
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    running += hits[i];
    cdf.counts[i] = running;
  }
  return cdf;
}

}  // namespace

std::vector<GridPoint> uniform_grid(std::uint64_t g) {
  if (g == 0) throw std::invalid_argument("grid size must be >= 1");
  std::vector<GridPoint> grid(g + 1);
  for (std::uint64_t j = 0; j <= g; ++j) grid[j] = {j, g};
  return grid;
}

EmpiricalCDF empirical_cdf(const FunctionTable& phi, std::uint64_t x, std::span<const GridPoint> grid,
                           const SieveConfig& config) {
  check_table(phi, x);
  check_grid(grid);
  validate(config);
  std::vector<std::uint64_t> hits(grid.size() + 1, 0);
  const auto n = static_cast<std::int64_t>(x);
#pragma omp parallel num_threads(config.worker_count)
  {
    std::vector<std::uint64_t> local(grid.size() + 1, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 1; i <= n; ++i) {
      const auto k = static_cast<std::uint64_t>(i);
      ++local[first_covering(phi(k), k, grid)];
    }
#pragma omp critical
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += local[i];
  }
  return accumulate(x, grid, std::move(hits));
}

EmpiricalCDF empirical_cdf(std::uint64_t x, std::span<const GridPoint> grid, const SieveConfig& config) {
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  check_grid(grid);
  return empirical_cdf(tabulate(FunctionKind::phi, {1, x + 1}, config), x, grid, config);
}

EmpiricalCDF empirical_cdf_reference(const FunctionTable& phi, std::uint64_t x,
                                     std::span<const GridPoint> grid) {
  check_table(phi, x);
  check_grid(grid);
  std::vector<std::uint64_t> hits(grid.size() + 1, 0);
  for (std::uint64_t k = 1; k <= x; ++k) ++hits[first_covering(phi(k), k, grid)];
  return accumulate(x, grid, std::move(hits));
}

IntegralBound integral_bound(const EmpiricalCDF& cdf) {
  const auto& grid = cdf.grid;
  if (grid.size() < 2 || grid.front().num != 0 || grid.back().num != grid.back().den) {
    throw std::invalid_argument("integral bound needs a grid spanning [0, 1]");
  }
  const auto weight = [](double t) { return 1.0 / ((1.0 + t) * (1.0 + t)); };
  IntegralBound b;
  b.x = cdf.x;
  b.g = grid.size() - 1;
  // Phi_x is nondecreasing and the weight is decreasing, so pairing opposite endpoints
  // brackets the integrand on every cell.
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    const double t0 = grid[j].value();
    const double t1 = grid[j + 1].value();
    const double h = t1 - t0;
    b.upper += cdf.value(j + 1) * weight(t0) * h;
    b.lower += cdf.value(j) * weight(t1) * h;
  }
  return b;
}

IntegralBound integral_bound(std::uint64_t x, std::uint64_t g, const SieveConfig& config) {
  if (g < 10) throw std::invalid_argument("integral bound requires G >= 10");
  const auto grid = uniform_grid(g);
  return integral_bound(empirical_cdf(x, grid, config));
}

PartitionBound partition_lower_bound(std::uint64_t x, std::span<const GridPoint> lambdas,
                                     const SieveConfig& config) {
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  if (lambdas.size() < 2) throw std::invalid_argument("partition needs r >= 2 points");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const auto& l = lambdas[i];
    if (l.den == 0 || l.num == 0 || l.num >= l.den) {
      throw std::invalid_argument("partition points must lie strictly inside (0, 1)");
    }
    if (i > 0 && less_equal(l, lambdas[i - 1])) {
      throw std::invalid_argument("partition points must be strictly ascending");
    }
  }

  const auto phi = tabulate(FunctionKind::phi, {1, x + 1}, config);
  PartitionBound out;
  out.x = x;
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    const auto& prev = lambdas[i - 1];
    const auto& cur = lambdas[i];
    const auto k_lo = static_cast<std::uint64_t>(static_cast<u128>(prev.num) * x / prev.den) + 1;
    const auto k_hi = static_cast<std::uint64_t>(static_cast<u128>(cur.num) * x / cur.den);
    // phi(k)/k > nu = (1 - lambda)/lambda  <=>  phi(k) * num > (den - num) * k
    for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
      out.partition_sum +=
          static_cast<u128>(phi(k)) * prev.num > static_cast<u128>(prev.den - prev.num) * k;
    }
  }
  const auto report = count_image(phi, x, config);
  out.exceed_count = x - report.in_range_preimages;
  out.direct_count = report.non_representable();
  return out;
}

PartitionBound partition_lower_bound(std::uint64_t x, std::uint64_t r, const SieveConfig& config) {
  if (r < 2) throw std::invalid_argument("partition requires r >= 2");
  std::vector<GridPoint> lambdas(r);
  for (std::uint64_t i = 1; i <= r; ++i) lambdas[i - 1] = {r + 1 + i, 2 * r + 2};
  return partition_lower_bound(x, lambdas, config);
}

}  // namespace kfk
