#include "kfk/representability.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "kfk/errors.hpp"

namespace kfk {

namespace {

// Per-n preimage counts saturate here; saturated n are recounted exactly afterwards.
constexpr std::uint8_t kSaturated = 255;

constexpr std::uint64_t kNoOverflow = std::numeric_limits<std::uint64_t>::max();

void check_anchor(const FunctionTable& f, std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  if (f.interval().lo != 1) throw std::invalid_argument("function table must start at k = 1");
  if (f.interval().hi <= x) throw std::invalid_argument("function table does not cover [1, x]");
}

struct Multiplicities {
  std::vector<std::uint8_t> counts;  // counts[n] for n <= x, saturating
  std::uint64_t in_range = 0;
};

void throw_overflow(std::uint64_t k) {
  throw std::out_of_range("k + f(k) overflows 64 bits at k = " + std::to_string(k));
}

template <bool Parallel>
Multiplicities count_preimages(const FunctionTable& f, std::uint64_t x, unsigned workers) {
  Multiplicities m;
  m.counts.assign(x + 1, 0);
  std::uint64_t in_range = 0;
  std::uint64_t overflow_at = kNoOverflow;
  const auto values = f.values();
  const auto n = static_cast<std::int64_t>(x);

  if constexpr (Parallel) {
    std::uint8_t* counts = m.counts.data();
#pragma omp parallel for schedule(static) num_threads(workers) reduction(+ : in_range) \
    reduction(min : overflow_at)
    for (std::int64_t i = 1; i <= n; ++i) {
      const auto k = static_cast<std::uint64_t>(i);
      const std::uint64_t fk = values[k - 1];
      if (fk > kNoOverflow - k) {
        overflow_at = std::min(overflow_at, k);
        continue;
      }
      const std::uint64_t v = k + fk;
      if (v > x) continue;
      ++in_range;
      std::atomic_ref<std::uint8_t> slot(counts[v]);
      std::uint8_t cur = slot.load(std::memory_order_relaxed);
      while (cur != kSaturated &&
             !slot.compare_exchange_weak(cur, static_cast<std::uint8_t>(cur + 1),
                                         std::memory_order_relaxed)) {
      }
    }
  } else {
    (void)workers;
    for (std::uint64_t k = 1; k <= x; ++k) {
      const std::uint64_t fk = values[k - 1];
      if (fk > kNoOverflow - k) {
        overflow_at = k;
        break;
      }
      const std::uint64_t v = k + fk;
      if (v > x) continue;
      ++in_range;
      if (m.counts[v] != kSaturated) ++m.counts[v];
    }
  }
  if (overflow_at != kNoOverflow) throw_overflow(overflow_at);
  m.in_range = in_range;
  return m;
}

// Exact multiplicity of every saturated n <= x.
std::map<std::uint64_t, std::uint64_t> recount_saturated(const FunctionTable& f, std::uint64_t x,
                                                         const std::vector<std::uint8_t>& counts) {
  std::map<std::uint64_t, std::uint64_t> exact;
  for (std::uint64_t n = 1; n <= x; ++n) {
    if (counts[n] == kSaturated) exact[n] = 0;
  }
  if (exact.empty()) return exact;
  const auto values = f.values();
  for (std::uint64_t k = 1; k <= x; ++k) {
    const std::uint64_t v = k + values[k - 1];
    if (v > x || counts[v] != kSaturated) continue;
    ++exact[v];
  }
  return exact;
}

template <bool Parallel>
RepReport build_report(const FunctionTable& f, std::uint64_t x, unsigned workers) {
  check_anchor(f, x);
  const auto m = count_preimages<Parallel>(f, x, workers);

  std::array<std::uint64_t, 256> small{};
  if constexpr (Parallel) {
    const auto n = static_cast<std::int64_t>(x);
#pragma omp parallel num_threads(workers)
    {
      std::array<std::uint64_t, 256> local{};
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 1; i <= n; ++i) ++local[m.counts[static_cast<std::size_t>(i)]];
#pragma omp critical
      for (std::size_t s = 0; s < local.size(); ++s) small[s] += local[s];
    }
  } else {
    for (std::uint64_t n = 1; n <= x; ++n) ++small[m.counts[n]];
  }

  RepReport r;
  r.x = x;
  r.f_kind = std::string(kind_name(f.kind()));
  r.in_range_preimages = m.in_range;
  r.histogram[0] = small[0];
  for (std::size_t s = 1; s < kSaturated; ++s) {
    if (small[s] != 0) r.histogram[s] = small[s];
  }
  if (small[kSaturated] != 0) {
    for (const auto& [n, s] : recount_saturated(f, x, m.counts)) ++r.histogram[s];
  }
  r.n_plus = x - small[0];
  return r;
}

}  // namespace

RepReport count_image(const FunctionTable& f, std::uint64_t x, const SieveConfig& config) {
  validate(config);
  // A single worker gains nothing from atomic increments.
  if (config.worker_count == 1) return build_report<false>(f, x, 1);
  return build_report<true>(f, x, config.worker_count);
}

RepReport count_image_reference(const FunctionTable& f, std::uint64_t x) {
  return build_report<false>(f, x, 1);
}

std::vector<DensityPoint> density_sweep(const FunctionTable& f, std::span<const std::uint64_t> x_grid,
                                        const SieveConfig& config) {
  validate(config);
  if (x_grid.empty()) throw std::invalid_argument("density grid is empty");
  if (x_grid.front() == 0) throw std::invalid_argument("x must be >= 1");
  if (!std::is_sorted(x_grid.begin(), x_grid.end(), std::less_equal<>())) {
    throw std::invalid_argument("density grid must be strictly ascending");
  }
  const std::uint64_t top = x_grid.back();
  check_anchor(f, top);
  // Preimages of n <= x lie in [1, x], so one pass up to the last grid point serves all.
  const auto m = count_preimages<true>(f, top, config.worker_count);

  std::vector<DensityPoint> out;
  out.reserve(x_grid.size());
  std::uint64_t hit = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= top; ++n) {
    hit += m.counts[n] != 0;
    if (n == x_grid[next]) {
      out.push_back({n, hit});
      ++next;
    }
  }
  return out;
}

std::vector<DensityPoint> density_sweep(FunctionKind kind, std::span<const std::uint64_t> x_grid,
                                        const SieveConfig& config) {
  if (x_grid.empty()) throw std::invalid_argument("density grid is empty");
  if (x_grid.front() == 0) throw std::invalid_argument("x must be >= 1");
  const auto f = tabulate(kind, {1, x_grid.back() + 1}, config);
  return density_sweep(f, x_grid, config);
}

BoundCheck theorem3_bound(const FunctionTable& f, std::uint64_t x, const Rational& c,
                          const SieveConfig& config) {
  check_anchor(f, x);
  u128 sum = 0;
  for (std::uint64_t k = 1; k <= x; ++k) {
    const std::uint64_t fk = f(k);
    if (static_cast<u128>(fk) * c.den() > c.num() * k) {
      throw precondition_error("f(" + std::to_string(k) + ") = " + std::to_string(fk) +
                                   " violates 0 <= f(k) <= c*k with c = " + c.str(),
                               k);
    }
    sum += fk;
  }
  const auto report = count_image(f, x, config);

  BoundCheck b;
  b.x = x;
  b.c = c;
  b.sum_f = sum;
  b.bound = Rational(sum * c.den(), (2 * c.num() + 2 * c.den()) * x);
  b.actual = report.non_representable();
  return b;
}

PhiMeanCheck phi_upper_constant_check(std::uint64_t x, const SieveConfig& config) {
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  const auto phi = tabulate(FunctionKind::phi, {1, x + 1}, config);
  u128 sum = 0;
  for (const std::uint64_t v : phi.values()) sum += v;
  PhiMeanCheck out;
  out.x = x;
  out.phi_sum = sum;
  const long double xx = static_cast<long double>(x);
  out.lhs = static_cast<double>(static_cast<long double>(sum) / (xx * xx));
  out.target = 3.0 / (std::numbers::pi * std::numbers::pi);
  return out;
}

}  // namespace kfk
