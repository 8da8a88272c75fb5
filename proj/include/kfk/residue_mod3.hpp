#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kfk/arith_sieve.hpp"

namespace kfk {

/// T_i = #{k <= x : k = i (mod 3), tau(k) = -i (mod 3)}.
struct TSplit {
  std::uint64_t t0 = 0;
  std::uint64_t t1 = 0;
  std::uint64_t t2 = 0;
  std::uint64_t total() const { return t0 + t1 + t2; }
  friend bool operator==(const TSplit&, const TSplit&) = default;
};

struct ResidueReport {
  std::uint64_t x = 0;
  std::uint64_t modulus = 3;
  std::vector<std::uint64_t> counts;  // counts[r] = #{k <= x : k + f(k) = r (mod modulus)}
  std::optional<TSplit> t_split;      // present for modulus 3 with f = tau
};

/// Throws std::invalid_argument for modulus < 2 or a table not covering [1, x].
ResidueReport residue_counts(const FunctionTable& f, std::uint64_t x, std::uint64_t modulus,
                             const SieveConfig& config = {});
ResidueReport residue_counts(std::uint64_t x, std::uint64_t modulus,
                             FunctionKind kind = FunctionKind::tau, const SieveConfig& config = {});

/// #{k <= y : gcd(k, 3) = 1, tau(k) != 0 (mod 3)}.
std::uint64_t count_K(std::uint64_t y, const SieveConfig& config = {});

/// Number of primes whose exact exponent in k is 1 (mod 3).
unsigned w_of_k(std::uint64_t k);

/// Nontrivial character modulo 3.
constexpr int chi3(std::uint64_t k) {
  switch (k % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
  }
}

struct TauMod3Violations {
  std::uint64_t congruence = 0;  // tau(k) != 0 yet tau(k) != 2^W(k) (mod 3)
  std::uint64_t structure = 0;   // [tau(k) != 0 (mod 3)] disagrees with [no exponent = 2 (mod 3)]
  std::uint64_t total() const { return congruence + structure; }
};

TauMod3Violations tau_mod3_identity_check(std::uint64_t x, const SieveConfig& config = {});

/// sum over k <= x, 3 does not divide k, 3 does not divide tau(k) of chi3(k) (-1)^W(k).
struct T14Point {
  std::uint64_t x;
  std::int64_t t14;
  double normalized() const { return static_cast<double>(t14 < 0 ? -t14 : t14) / static_cast<double>(x); }
};

std::vector<T14Point> t14_decay_probe(std::span<const std::uint64_t> x_grid, const SieveConfig& config = {});

/// Everything needed to check T_1 + T_2 = (K - T_1^(4)) / 2 at one x, each side counted
/// independently.
struct Mod3Decomposition {
  std::uint64_t x = 0;
  std::vector<std::uint64_t> counts;
  TSplit split;
  std::uint64_t k_count = 0;  // K(x) = T_1^(1)(x)
  std::int64_t t14 = 0;

  bool identity_holds() const {
    return 2 * static_cast<std::int64_t>(split.t1 + split.t2) ==
           static_cast<std::int64_t>(k_count) - t14;
  }
  double density0() const { return static_cast<double>(counts.at(0)) / static_cast<double>(x); }
};

Mod3Decomposition mod3_decomposition(std::uint64_t x, const SieveConfig& config = {});

}  // namespace kfk
