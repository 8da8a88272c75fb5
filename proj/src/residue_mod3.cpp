#include "kfk/residue_mod3.hpp"

#include <algorithm>
#include <stdexcept>

namespace kfk {

namespace {

void check_table(const FunctionTable& f, std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  if (f.interval().lo != 1 || f.interval().hi <= x) {
    throw std::invalid_argument("function table must cover [1, x]");
  }
}

void check_grid(std::span<const std::uint64_t> grid) {
  if (grid.empty()) throw std::invalid_argument("grid is empty");
  if (grid.front() == 0) throw std::invalid_argument("x must be >= 1");
  if (!std::is_sorted(grid.begin(), grid.end(), std::less_equal<>())) {
    throw std::invalid_argument("grid must be strictly ascending");
  }
}

struct WData {
  unsigned w = 0;
  bool has_exponent_two = false;  // some exact exponent = 2 (mod 3)
};

WData w_data(std::uint64_t k, std::span<const std::uint32_t> spf) {
  WData d;
  for (const auto& pp : factorize(k, spf)) {
    if (pp.exponent % 3 == 1) ++d.w;
    if (pp.exponent % 3 == 2) d.has_exponent_two = true;
  }
  return d;
}

}  // namespace

ResidueReport residue_counts(const FunctionTable& f, std::uint64_t x, std::uint64_t modulus,
                             const SieveConfig& config) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  check_table(f, x);
  validate(config);

  const bool split = modulus == 3 && f.kind() == FunctionKind::tau;
  std::vector<std::uint64_t> counts(modulus, 0);
  std::uint64_t t0 = 0, t1 = 0, t2 = 0;
  const auto n = static_cast<std::int64_t>(x);
#pragma omp parallel num_threads(config.worker_count)
  {
    std::vector<std::uint64_t> local(modulus, 0);
#pragma omp for schedule(static) reduction(+ : t0, t1, t2) nowait
    for (std::int64_t i = 1; i <= n; ++i) {
      const auto k = static_cast<std::uint64_t>(i);
      const std::uint64_t fk = f(k);
      ++local[(k % modulus + fk % modulus) % modulus];
      if (split) {
        const std::uint64_t kr = k % 3;
        if (fk % 3 == (3 - kr) % 3) {
          t0 += kr == 0;
          t1 += kr == 1;
          t2 += kr == 2;
        }
      }
    }
#pragma omp critical
    for (std::uint64_t r = 0; r < modulus; ++r) counts[r] += local[r];
  }

  ResidueReport out;
  out.x = x;
  out.modulus = modulus;
  out.counts = std::move(counts);
  if (split) out.t_split = TSplit{t0, t1, t2};
  return out;
}

ResidueReport residue_counts(std::uint64_t x, std::uint64_t modulus, FunctionKind kind,
                             const SieveConfig& config) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  return residue_counts(tabulate(kind, {1, x + 1}, config), x, modulus, config);
}

std::uint64_t count_K(std::uint64_t y, const SieveConfig& config) {
  if (y == 0) throw std::invalid_argument("y must be >= 1");
  const auto tau = tabulate(FunctionKind::tau, {1, y + 1}, config);
  std::uint64_t count = 0;
  const auto n = static_cast<std::int64_t>(y);
#pragma omp parallel for schedule(static) num_threads(config.worker_count) reduction(+ : count)
  for (std::int64_t i = 1; i <= n; ++i) {
    const auto k = static_cast<std::uint64_t>(i);
    count += (k % 3 != 0) && (tau(k) % 3 != 0);
  }
  return count;
}

unsigned w_of_k(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("W(k) requires k >= 1");
  unsigned w = 0;
  for (const auto& pp : factorize(k)) w += pp.exponent % 3 == 1;
  return w;
}

TauMod3Violations tau_mod3_identity_check(std::uint64_t x, const SieveConfig& config) {
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  const auto tau = tabulate(FunctionKind::tau, {1, x + 1}, config);
  const auto spf = smallest_prime_factors(x);
  const std::span<const std::uint32_t> spf_view(spf);
  std::uint64_t congruence = 0, structure = 0;
  const auto n = static_cast<std::int64_t>(x);
#pragma omp parallel for schedule(static) num_threads(config.worker_count) \
    reduction(+ : congruence, structure)
  for (std::int64_t i = 1; i <= n; ++i) {
    const auto k = static_cast<std::uint64_t>(i);
    const std::uint64_t t = tau(k) % 3;
    const WData d = w_data(k, spf_view);
    structure += (t != 0) == d.has_exponent_two;
    if (t != 0) congruence += t != ((d.w % 2 == 0) ? 1u : 2u);
  }
  return {congruence, structure};
}

std::vector<T14Point> t14_decay_probe(std::span<const std::uint64_t> x_grid, const SieveConfig& config) {
  check_grid(x_grid);
  validate(config);
  const std::uint64_t top = x_grid.back();
  const auto tau = tabulate(FunctionKind::tau, {1, top + 1}, config);
  const auto spf = smallest_prime_factors(top);
  const std::span<const std::uint32_t> spf_view(spf);

  std::vector<std::int8_t> term(top + 1, 0);
  const auto n = static_cast<std::int64_t>(top);
#pragma omp parallel for schedule(static) num_threads(config.worker_count)
  for (std::int64_t i = 1; i <= n; ++i) {
    const auto k = static_cast<std::uint64_t>(i);
    if (k % 3 == 0 || tau(k) % 3 == 0) continue;
    const int sign = (w_data(k, spf_view).w % 2 == 0) ? 1 : -1;
    term[k] = static_cast<std::int8_t>(chi3(k) * sign);
  }

  std::vector<T14Point> out;
  std::int64_t sum = 0;
  std::size_t next = 0;
  for (std::uint64_t k = 1; k <= top; ++k) {
    sum += term[k];
    if (k == x_grid[next]) {
      out.push_back({k, sum});
      ++next;
    }
  }
  return out;
}

Mod3Decomposition mod3_decomposition(std::uint64_t x, const SieveConfig& config) {
  const auto report = residue_counts(x, 3, FunctionKind::tau, config);
  Mod3Decomposition d;
  d.x = x;
  d.counts = report.counts;
  d.split = *report.t_split;
  d.k_count = count_K(x, config);
  const std::uint64_t grid[] = {x};
  d.t14 = t14_decay_probe(grid, config).front().t14;
  return d;
}

}  // namespace kfk
