#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kfk/arith_sieve.hpp"

namespace kfk {

/// A rational evaluation point num/den in [0, 1].
struct GridPoint {
  std::uint64_t num;
  std::uint64_t den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// j/g for j = 0..g.
std::vector<GridPoint> uniform_grid(std::uint64_t g);

/// Phi_x(lambda) = (1/x) #{k <= x : phi(k)/k <= lambda} on a grid, held as exact counts.
struct EmpiricalCDF {
  std::uint64_t x = 0;
  std::vector<GridPoint> grid;
  std::vector<std::uint64_t> counts;  // counts[i] = x * Phi_x(grid[i])

  double value(std::size_t i) const { return static_cast<double>(counts[i]) / static_cast<double>(x); }
};

/// Comparisons are exact: phi(k) * den <= num * k. Throws std::invalid_argument for an
/// empty, unsorted, or out-of-[0,1] grid.
EmpiricalCDF empirical_cdf(std::uint64_t x, std::span<const GridPoint> grid, const SieveConfig& config = {});
EmpiricalCDF empirical_cdf(const FunctionTable& phi, std::uint64_t x, std::span<const GridPoint> grid,
                           const SieveConfig& config = {});

/// Serial counterpart of empirical_cdf, kept as a reference.
EmpiricalCDF empirical_cdf_reference(const FunctionTable& phi, std::uint64_t x,
                                     std::span<const GridPoint> grid);

/// Certified bracket of the integral of Phi_x(t) / (1+t)^2 over [0, 1].
struct IntegralBound {
  std::uint64_t x = 0;
  std::uint64_t g = 0;
  double lower = 0;
  double upper = 0;
  double bound() const { return 0.5 + upper; }
};

/// Uses the uniform grid j/g; g >= 10.
IntegralBound integral_bound(std::uint64_t x, std::uint64_t g, const SieveConfig& config = {});
IntegralBound integral_bound(const EmpiricalCDF& cdf);

struct PartitionBound {
  std::uint64_t x = 0;
  std::uint64_t partition_sum = 0;  // sum_i #{lambda_{i-1} x < k <= lambda_i x : phi(k)/k > nu_{i-1}}
  std::uint64_t exceed_count = 0;   // #{k <= x : k + phi(k) > x}
  std::uint64_t direct_count = 0;   // #{n <= x : n != k + phi(k) for every k}
};

/// lambda_i = 1/2 + i/(2r + 2) for i = 1..r. Throws for r < 2.
PartitionBound partition_lower_bound(std::uint64_t x, std::uint64_t r, const SieveConfig& config = {});

/// Explicit lambda grid, strictly ascending inside (0, 1), at least two points. Every
/// counted k satisfies k + phi(k) > x for any such grid.
PartitionBound partition_lower_bound(std::uint64_t x, std::span<const GridPoint> lambdas,
                                     const SieveConfig& config = {});

}  // namespace kfk
