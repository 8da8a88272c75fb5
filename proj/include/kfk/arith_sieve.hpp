#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace kfk {

enum class FunctionKind : std::uint8_t {
  omega = 0,       // number of distinct prime divisors
  tau = 1,         // number of divisors
  phi = 2,         // Euler totient
  sigma = 3,       // sum of divisors
  lpf = 4,         // largest prime factor, lpf(1) = 1
  squarefree = 5,  // 0/1 flag
  user = 6,        // loaded from a file, never sieved
};

std::string_view kind_name(FunctionKind kind);
std::optional<FunctionKind> parse_kind(std::string_view name);

/// Largest admissible argument of any tabulated function.
inline constexpr std::uint64_t kMaxArgument = 10'000'000'000ULL;
/// Largest number of entries a single table may hold.
inline constexpr std::uint64_t kMaxTableEntries = 1ULL << 31;
/// Above this bound tabulate_reference refuses to run (it sieves all of [1, hi)).
inline constexpr std::uint64_t kMaxReferenceLimit = 100'000'000ULL;

/// Half-open integer range [lo, hi) with lo >= 1.
struct Interval {
  std::uint64_t lo = 1;
  std::uint64_t hi = 2;

  std::uint64_t size() const { return hi - lo; }
  bool contains(std::uint64_t n) const { return lo <= n && n < hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Throws std::invalid_argument for lo == 0 or hi <= lo and std::out_of_range when the
/// interval exceeds kMaxArgument or kMaxTableEntries.
void validate(const Interval& interval);

unsigned default_worker_count();

struct SieveConfig {
  std::uint64_t segment_length = 1ULL << 22;
  unsigned worker_count = default_worker_count();
};

void validate(const SieveConfig& config);

/// Values of one arithmetic function on an interval, indexed by n - lo. Immutable.
class FunctionTable {
 public:
  FunctionTable(FunctionKind kind, Interval interval, std::vector<std::uint64_t> values);

  FunctionKind kind() const { return kind_; }
  const Interval& interval() const { return interval_; }
  std::span<const std::uint64_t> values() const { return values_; }

  /// Value at the integer n (not at an index). Throws std::out_of_range outside the interval.
  std::uint64_t at(std::uint64_t n) const;
  std::uint64_t operator()(std::uint64_t n) const { return values_[n - interval_.lo]; }

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  FunctionKind kind_;
  Interval interval_;
  std::vector<std::uint64_t> values_;
};

/// Segmented, OpenMP-parallel tabulation. Bit-identical for every segment_length and
/// worker_count.
FunctionTable tabulate(FunctionKind kind, Interval interval, const SieveConfig& config = {});

/// Serial linear sieve over [1, hi), sliced to the interval. Kept as a reference for the
/// segmented kernel; hi is limited to kMaxReferenceLimit + 1.
FunctionTable tabulate_reference(FunctionKind kind, Interval interval);

/// Primes p <= limit, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

/// spf[n] = least prime factor of n for 2 <= n <= limit; spf[0] = 0, spf[1] = 1.
std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t limit);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Factorization of n <= spf.size() - 1 by repeated lookup of the least prime factor.
std::vector<PrimePower> factorize(std::uint64_t n, std::span<const std::uint32_t> spf);

/// Largest divisor of m whose prime factors are all <= y. Returns 1 for y < 2.
/// Throws std::invalid_argument for m == 0.
std::uint64_t smooth_part(std::uint64_t m, double y);

void write_table_cache(const FunctionTable& table, const std::filesystem::path& path);
FunctionTable read_table_cache(const std::filesystem::path& path);

}  // namespace kfk
