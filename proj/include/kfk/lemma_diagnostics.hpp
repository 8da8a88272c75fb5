#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "kfk/arith_sieve.hpp"

namespace kfk {

/// Which of the smooth-part lemmas hold for a single m (true = holds).
struct LemmaChecks {
  bool smooth_bound = true;             // D(m, y) <= log x
  std::array<bool, 4> totient{true, true, true, true};  // properties (1)-(4) on phi(m)
  bool reciprocal_sum = true;           // sum of 1/p over p | phi(m), p > log log x, is <= 1
};

/// Failure counts over 1 <= m <= x.
struct LemmaDiagnostics {
  std::uint64_t x = 0;
  double y = 0;
  double log_x = 0;
  double loglog_x = 0;
  std::uint64_t smooth_bound_failures = 0;
  std::array<std::uint64_t, 4> totient_failures{};
  std::uint64_t reciprocal_sum_failures = 0;

  double fraction(std::uint64_t failures) const {
    return static_cast<double>(failures) / static_cast<double>(x);
  }
};

/// log log x / log log log x, floored at 2. Requires x >= 16.
double default_smooth_bound(std::uint64_t x);

/// Evaluates every check for one m <= x by trial division.
LemmaChecks check_lemmas(std::uint64_t m, std::uint64_t x, double y);

/// Throws std::invalid_argument for x < 16. y defaults to default_smooth_bound(x).
LemmaDiagnostics lemma_diagnostics(std::uint64_t x, std::optional<double> y = std::nullopt,
                                   const SieveConfig& config = {});

}  // namespace kfk
