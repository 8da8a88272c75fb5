#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kfk/arith_sieve.hpp"

namespace kfk {

enum class Parity : std::uint8_t { any, odd_l };

/// Parameters of the dense set of n = l*p used in the lower-bound arguments.
struct ProofSetSpec {
  std::uint64_t x = 0;
  double K = 2.0;
  Parity parity = Parity::any;

  std::uint64_t y() const;              // ceil(x^(1/3))
  double omega_low() const;             // log log x - K sqrt(log log x)
  double omega_high() const;            // log log x + K sqrt(log log x)
};

struct ProofSetMember {
  std::uint64_t n;
  std::uint64_t l;
  std::uint64_t p;
  friend bool operator==(const ProofSetMember&, const ProofSetMember&) = default;
};

/// All n <= x with n = l*p, l <= y squarefree (odd for Parity::odd_l), omega(l) in the
/// interval, and p prime with y < p. Sorted by n. Throws std::invalid_argument for x < 16.
std::vector<ProofSetMember> build_proof_set(const ProofSetSpec& spec, const SieveConfig& config = {});

struct EnergyReport {
  std::uint64_t set_size = 0;
  std::uint64_t energy = 0;        // #{(n, m) in A^2 : n + f(n) = m + f(m)}
  std::uint64_t diagonal = 0;      // |A|
  std::uint64_t off_diagonal = 0;  // energy - |A|
  std::uint64_t image_size = 0;    // distinct values of n + f(n)
  std::uint64_t cs_bound = 0;      // ceil(|A|^2 / energy)
};

/// Groups equal values of k + f(k) by sorting. Every index must lie in the table.
EnergyReport additive_energy(std::span<const std::uint64_t> index_set, const FunctionTable& f);

/// Quadratic pair scan, kept as a reference for additive_energy.
std::uint64_t additive_energy_pairs(std::span<const std::uint64_t> index_set, const FunctionTable& f);

struct ImageBound {
  EnergyReport energy;
  bool cauchy_schwarz_holds = false;  // image_size * E >= |A|^2, exact
  std::uint64_t max_f = 0;            // M = max_{k <= x} f(k)
  std::uint64_t image_within_x = 0;   // image values in [1, x]
  std::uint64_t image_tail = 0;       // image values in (x, x + M]
  std::uint64_t image_beyond = 0;     // image values above x + M
};

ImageBound image_lower_bound(std::span<const std::uint64_t> index_set, const FunctionTable& f,
                             std::uint64_t x);

/// The n column of a proof set.
std::vector<std::uint64_t> members(std::span<const ProofSetMember> set);

}  // namespace kfk
