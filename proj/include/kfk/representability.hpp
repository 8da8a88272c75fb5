#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kfk/arith_sieve.hpp"
#include "kfk/rational.hpp"

namespace kfk {

/// Image statistics of k -> k + f(k) restricted to n <= x.
struct RepReport {
  std::uint64_t x = 0;
  std::string f_kind;
  std::uint64_t n_plus = 0;                          // #{n <= x : n = k + f(k) for some k}
  std::map<std::uint64_t, std::uint64_t> histogram;  // s -> |A_s(x)|; s = 0 always present
  std::uint64_t in_range_preimages = 0;              // #{k <= x : k + f(k) <= x}

  std::uint64_t non_representable() const { return x - n_plus; }
  friend bool operator==(const RepReport&, const RepReport&) = default;
};

/// OpenMP-parallel image count. The table must start at 1 and cover [1, x].
RepReport count_image(const FunctionTable& f, std::uint64_t x, const SieveConfig& config = {});

/// Serial counterpart of count_image, kept as a reference.
RepReport count_image_reference(const FunctionTable& f, std::uint64_t x);

struct DensityPoint {
  std::uint64_t x;
  std::uint64_t n_plus;
  Rational exact() const { return Rational(n_plus, x); }
  double density() const { return static_cast<double>(n_plus) / static_cast<double>(x); }
};

/// n_plus/x for every grid point from one counting pass up to the last point.
/// Grid must be nonempty and strictly ascending.
std::vector<DensityPoint> density_sweep(const FunctionTable& f, std::span<const std::uint64_t> x_grid,
                                        const SieveConfig& config = {});
std::vector<DensityPoint> density_sweep(FunctionKind kind, std::span<const std::uint64_t> x_grid,
                                        const SieveConfig& config = {});

/// Lower bound on non-representable n <= x for any 0 <= f(k) <= c*k:
/// x - n_plus >= sum_{k<=x} f(k) / ((2c + 2) x).
struct BoundCheck {
  std::uint64_t x = 0;
  Rational c;
  u128 sum_f = 0;
  Rational bound;
  std::uint64_t actual = 0;

  bool holds() const { return Rational(actual) >= bound; }
};

/// Throws precondition_error naming the first k with f(k) > c*k.
BoundCheck theorem3_bound(const FunctionTable& f, std::uint64_t x, const Rational& c,
                          const SieveConfig& config = {});

/// Mean totient normalisation sum_{k<=x} phi(k) / x^2 against its limit 3/pi^2.
struct PhiMeanCheck {
  std::uint64_t x = 0;
  u128 phi_sum = 0;
  double lhs = 0;
  double target = 0;
};

PhiMeanCheck phi_upper_constant_check(std::uint64_t x, const SieveConfig& config = {});

}  // namespace kfk
