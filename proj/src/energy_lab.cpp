#include "kfk/energy_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "kfk/rational.hpp"

namespace kfk {

namespace {

std::vector<std::uint64_t> image_values(std::span<const std::uint64_t> index_set, const FunctionTable& f) {
  std::vector<std::uint64_t> values;
  values.reserve(index_set.size());
  for (const std::uint64_t k : index_set) {
    const std::uint64_t fk = f.at(k);
    if (fk > std::numeric_limits<std::uint64_t>::max() - k) {
      throw std::out_of_range("k + f(k) overflows 64 bits at k = " + std::to_string(k));
    }
    values.push_back(k + fk);
  }
  return values;
}

void check_distinct(std::span<const std::uint64_t> index_set) {
  std::vector<std::uint64_t> sorted(index_set.begin(), index_set.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("index set contains a repeated element");
  }
}

}  // namespace

std::uint64_t ProofSetSpec::y() const {
  auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(x)));
  while (r > 0 && (r - 1) * (r - 1) * (r - 1) >= x) --r;
  while (r * r * r < x) ++r;
  return r;
}

double ProofSetSpec::omega_low() const {
  const double l2 = std::log(std::log(static_cast<double>(x)));
  return l2 - K * std::sqrt(l2);
}

double ProofSetSpec::omega_high() const {
  const double l2 = std::log(std::log(static_cast<double>(x)));
  return l2 + K * std::sqrt(l2);
}

std::vector<ProofSetMember> build_proof_set(const ProofSetSpec& spec, const SieveConfig& config) {
  if (spec.x < 16) throw std::invalid_argument("proof set requires x >= 16");
  if (!(spec.K > 0)) throw std::invalid_argument("K must be positive");
  validate(config);
  const std::uint64_t x = spec.x;
  const std::uint64_t y = spec.y();
  const double lo = spec.omega_low();
  const double hi = spec.omega_high();

  const auto lpf = tabulate(FunctionKind::lpf, {1, x + 1}, config);
  const auto omega = tabulate(FunctionKind::omega, {1, y + 1}, config);
  const auto squarefree = tabulate(FunctionKind::squarefree, {1, y + 1}, config);

  // Chunks are scanned in parallel and concatenated in order, so output is sorted by n.
  const std::uint64_t chunk = std::max<std::uint64_t>(1 << 16, x / (64 * config.worker_count) + 1);
  const auto chunks = static_cast<std::int64_t>((x + chunk - 1) / chunk);
  std::vector<std::vector<ProofSetMember>> parts(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1) num_threads(config.worker_count)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk + 1;
    const std::uint64_t end = std::min(x, begin + chunk - 1);
    auto& part = parts[static_cast<std::size_t>(c)];
    for (std::uint64_t n = begin; n <= end; ++n) {
      const std::uint64_t p = lpf(n);
      if (p <= y) continue;
      const std::uint64_t l = n / p;
      if (l > y || squarefree(l) == 0) continue;
      if (spec.parity == Parity::odd_l && l % 2 == 0) continue;
      const auto w = static_cast<double>(omega(l));
      if (w < lo || w > hi) continue;
      part.push_back({n, l, p});
    }
  }

  std::vector<ProofSetMember> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

EnergyReport additive_energy(std::span<const std::uint64_t> index_set, const FunctionTable& f) {
  check_distinct(index_set);
  auto values = image_values(index_set, f);
  std::sort(values.begin(), values.end());

  EnergyReport r;
  r.set_size = values.size();
  r.diagonal = values.size();
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const std::uint64_t run = j - i;
    r.energy += run * run;
    ++r.image_size;
    i = j;
  }
  r.off_diagonal = r.energy - r.diagonal;
  if (r.energy > 0) {
    const u128 sq = static_cast<u128>(r.set_size) * r.set_size;
    r.cs_bound = static_cast<std::uint64_t>((sq + r.energy - 1) / r.energy);
  }
  return r;
}

std::uint64_t additive_energy_pairs(std::span<const std::uint64_t> index_set, const FunctionTable& f) {
  const auto values = image_values(index_set, f);
  std::uint64_t energy = 0;
  for (const std::uint64_t a : values) {
    for (const std::uint64_t b : values) energy += a == b;
  }
  return energy;
}

ImageBound image_lower_bound(std::span<const std::uint64_t> index_set, const FunctionTable& f,
                             std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("x must be >= 1");
  if (f.interval().lo != 1 || f.interval().hi <= x) {
    throw std::invalid_argument("function table must cover [1, x]");
  }
  ImageBound b;
  b.energy = additive_energy(index_set, f);
  b.cauchy_schwarz_holds = static_cast<u128>(b.energy.image_size) * b.energy.energy >=
                           static_cast<u128>(b.energy.set_size) * b.energy.set_size;
  for (std::uint64_t k = 1; k <= x; ++k) b.max_f = std::max(b.max_f, f(k));

  auto values = image_values(index_set, f);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (const std::uint64_t v : values) {
    if (v <= x) {
      ++b.image_within_x;
    } else if (v - x <= b.max_f) {
      ++b.image_tail;
    } else {
      ++b.image_beyond;
    }
  }
  return b;
}

std::vector<std::uint64_t> members(std::span<const ProofSetMember> set) {
  std::vector<std::uint64_t> out;
  out.reserve(set.size());
  for (const auto& m : set) out.push_back(m.n);
  return out;
}

}  // namespace kfk
