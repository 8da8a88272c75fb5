#include "kfk/arith_sieve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kfk {

namespace {

constexpr std::array<std::string_view, 7> kKindNames = {"omega", "tau",        "phi", "sigma",
                                                        "lpf",   "squarefree", "user"};

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Running state of one n while its prime factors are peeled off in ascending order.
template <FunctionKind Kind>
struct Accumulate {
  static constexpr std::uint64_t identity() {
    if constexpr (Kind == FunctionKind::omega) return 0;
    return 1;
  }

  // p^e || n, p_pow = p^e.
  static void apply(std::uint64_t& acc, std::uint64_t p, unsigned e, std::uint64_t p_pow) {
    if constexpr (Kind == FunctionKind::omega) {
      acc += 1;
    } else if constexpr (Kind == FunctionKind::tau) {
      acc *= e + 1;
    } else if constexpr (Kind == FunctionKind::phi) {
      acc *= p_pow / p * (p - 1);
    } else if constexpr (Kind == FunctionKind::sigma) {
      acc *= (p_pow - 1) / (p - 1) + p_pow;
    } else if constexpr (Kind == FunctionKind::lpf) {
      acc = p;
    } else if constexpr (Kind == FunctionKind::squarefree) {
      if (e > 1) acc = 0;
    }
  }
};

// Sieves [a, a + out.size()) into out; rem is scratch of the same length.
template <FunctionKind Kind>
void sieve_segment(std::uint64_t a, std::span<const std::uint32_t> base_primes,
                   std::span<std::uint64_t> out, std::span<std::uint64_t> rem) {
  using Acc = Accumulate<Kind>;
  const std::uint64_t len = out.size();
  const std::uint64_t b = a + len;
  for (std::uint64_t i = 0; i < len; ++i) {
    rem[i] = a + i;
    out[i] = Acc::identity();
  }
  for (const std::uint64_t p : base_primes) {
    if (p * p >= b) break;
    std::uint64_t first = (a + p - 1) / p * p;
    for (std::uint64_t n = first; n < b; n += p) {
      const std::uint64_t i = n - a;
      std::uint64_t r = rem[i] / p;
      std::uint64_t p_pow = p;
      unsigned e = 1;
      while (r % p == 0) {
        r /= p;
        p_pow *= p;
        ++e;
      }
      rem[i] = r;
      Acc::apply(out[i], p, e, p_pow);
    }
  }
  // At most one prime factor exceeds sqrt(b - 1).
  for (std::uint64_t i = 0; i < len; ++i) {
    if (rem[i] > 1) Acc::apply(out[i], rem[i], 1, rem[i]);
  }
}

template <FunctionKind Kind>
void tabulate_segments(const Interval& interval, const SieveConfig& config,
                       std::span<std::uint64_t> values) {
  const auto base_primes = primes_up_to(isqrt(interval.hi - 1));
  const std::uint64_t seg = std::min<std::uint64_t>(config.segment_length, interval.size());
  const auto segments = static_cast<std::int64_t>((interval.size() + seg - 1) / seg);

#pragma omp parallel num_threads(config.worker_count)
  {
    std::vector<std::uint64_t> rem(seg);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < segments; ++s) {
      const std::uint64_t offset = static_cast<std::uint64_t>(s) * seg;
      const std::uint64_t len = std::min(seg, interval.size() - offset);
      sieve_segment<Kind>(interval.lo + offset, base_primes, values.subspan(offset, len),
                          std::span(rem).first(len));
    }
  }
}

// Linear sieve state: least prime factor and the full power of it dividing n.
struct LinearSieve {
  std::vector<std::uint32_t> spf;
  std::vector<std::uint64_t> spf_power;
};

LinearSieve linear_sieve(std::uint64_t limit) {
  LinearSieve s;
  s.spf.assign(limit + 1, 0);
  s.spf_power.assign(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  if (limit >= 1) {
    s.spf[1] = 1;
    s.spf_power[1] = 1;
  }
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (s.spf[n] == 0) {
      s.spf[n] = static_cast<std::uint32_t>(n);
      s.spf_power[n] = n;
      primes.push_back(static_cast<std::uint32_t>(n));
    }
    for (const std::uint64_t p : primes) {
      if (p > s.spf[n] || n * p > limit) break;
      s.spf[n * p] = static_cast<std::uint32_t>(p);
      s.spf_power[n * p] = (p == s.spf[n]) ? s.spf_power[n] * p : p;
    }
  }
  return s;
}

void check_kind_sievable(FunctionKind kind) {
  if (kind == FunctionKind::user) {
    throw std::invalid_argument("user functions are loaded from a table, not sieved");
  }
}

}  // namespace

std::string_view kind_name(FunctionKind kind) { return kKindNames.at(static_cast<std::size_t>(kind)); }

std::optional<FunctionKind> parse_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<FunctionKind>(i);
  }
  return std::nullopt;
}

void validate(const Interval& interval) {
  if (interval.lo == 0) throw std::invalid_argument("interval lower bound must be >= 1");
  if (interval.hi <= interval.lo) throw std::invalid_argument("interval requires hi > lo");
  if (interval.hi - 1 > kMaxArgument) {
    throw std::out_of_range("interval exceeds the supported argument bound 10^10");
  }
  if (interval.size() > kMaxTableEntries) {
    throw std::out_of_range("interval length exceeds the table entry budget");
  }
}

unsigned default_worker_count() {
#ifdef _OPENMP
  return static_cast<unsigned>(std::max(1, omp_get_max_threads()));
#else
  return 1;
#endif
}

void validate(const SieveConfig& config) {
  if (config.segment_length < 64) throw std::invalid_argument("segment_length must be >= 64");
  if (config.worker_count == 0) throw std::invalid_argument("worker_count must be >= 1");
}

FunctionTable::FunctionTable(FunctionKind kind, Interval interval, std::vector<std::uint64_t> values)
    : kind_(kind), interval_(interval), values_(std::move(values)) {
  validate(interval_);
  if (values_.size() != interval_.size()) {
    throw std::invalid_argument("table size does not match its interval");
  }
}

std::uint64_t FunctionTable::at(std::uint64_t n) const {
  if (!interval_.contains(n)) {
    throw std::out_of_range("argument " + std::to_string(n) + " outside the tabulated interval");
  }
  return values_[n - interval_.lo];
}

FunctionTable tabulate(FunctionKind kind, Interval interval, const SieveConfig& config) {
  check_kind_sievable(kind);
  validate(interval);
  validate(config);
  std::vector<std::uint64_t> values(interval.size());
  std::span<std::uint64_t> out(values);
  switch (kind) {
    case FunctionKind::omega: tabulate_segments<FunctionKind::omega>(interval, config, out); break;
    case FunctionKind::tau: tabulate_segments<FunctionKind::tau>(interval, config, out); break;
    case FunctionKind::phi: tabulate_segments<FunctionKind::phi>(interval, config, out); break;
    case FunctionKind::sigma: tabulate_segments<FunctionKind::sigma>(interval, config, out); break;
    case FunctionKind::lpf: tabulate_segments<FunctionKind::lpf>(interval, config, out); break;
    case FunctionKind::squarefree:
      tabulate_segments<FunctionKind::squarefree>(interval, config, out);
      break;
    case FunctionKind::user: break;
  }
  return FunctionTable(kind, interval, std::move(values));
}

FunctionTable tabulate_reference(FunctionKind kind, Interval interval) {
  check_kind_sievable(kind);
  validate(interval);
  if (interval.hi - 1 > kMaxReferenceLimit) {
    throw std::out_of_range("reference sieve is limited to arguments <= 10^8");
  }
  const auto sieve = linear_sieve(interval.hi - 1);
  std::vector<std::uint64_t> full(interval.hi, 0);
  full[1] = (kind == FunctionKind::omega) ? 0 : 1;
  for (std::uint64_t n = 2; n < interval.hi; ++n) {
    const std::uint64_t p = sieve.spf[n];
    const std::uint64_t pk = sieve.spf_power[n];
    const std::uint64_t rest = n / pk;
    switch (kind) {
      case FunctionKind::omega: full[n] = full[rest] + 1; break;
      case FunctionKind::tau: {
        unsigned e = 0;
        for (std::uint64_t t = pk; t > 1; t /= p) ++e;
        full[n] = full[rest] * (e + 1);
        break;
      }
      case FunctionKind::phi: full[n] = full[rest] * (pk - pk / p); break;
      case FunctionKind::sigma: full[n] = full[rest] * ((pk * p - 1) / (p - 1)); break;
      case FunctionKind::lpf: full[n] = (rest == 1) ? p : full[rest]; break;
      case FunctionKind::squarefree: full[n] = (pk == p) ? full[rest] : 0; break;
      case FunctionKind::user: break;
    }
  }
  std::vector<std::uint64_t> values(full.begin() + static_cast<std::ptrdiff_t>(interval.lo),
                                    full.end());
  return FunctionTable(kind, interval, std::move(values));
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t limit) {
  return linear_sieve(limit).spf;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +/- 1 wheel
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<PrimePower> factorize(std::uint64_t n, std::span<const std::uint32_t> spf) {
  if (n >= spf.size()) throw std::out_of_range("argument exceeds the least-prime-factor table");
  std::vector<PrimePower> out;
  while (n > 1) {
    const std::uint64_t p = spf[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

std::uint64_t smooth_part(std::uint64_t m, double y) {
  if (m == 0) throw std::invalid_argument("smooth_part requires m >= 1");
  if (!(y >= 2.0)) return 1;
  std::uint64_t smooth = 1;
  std::uint64_t rest = m;
  for (std::uint64_t d = 2; static_cast<double>(d) <= y && d <= rest / d; ++d) {
    while (rest % d == 0) {
      rest /= d;
      smooth *= d;
    }
  }
  // rest is now 1, a prime, or has every prime factor above y
  if (rest > 1 && static_cast<double>(rest) <= y) smooth *= rest;
  return smooth;
}

}  // namespace kfk
