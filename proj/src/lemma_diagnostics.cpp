#include "kfk/lemma_diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace kfk {

namespace {

struct SmallPrime {
  std::uint64_t p;
  std::uint64_t max_power;  // largest p^a <= y
  unsigned a;
};

struct Context {
  std::uint64_t x;
  double y;
  double log_x;
  double loglog_x;
  std::vector<SmallPrime> small_primes;
};

Context make_context(std::uint64_t x, double y) {
  Context ctx{x, y, std::log(static_cast<double>(x)), std::log(std::log(static_cast<double>(x))), {}};
  const auto bound = static_cast<std::uint64_t>(std::floor(y));
  for (const std::uint64_t p : primes_up_to(bound)) {
    SmallPrime sp{p, p, 1};
    while (static_cast<double>(sp.max_power * p) <= y) {
      sp.max_power *= p;
      ++sp.a;
    }
    ctx.small_primes.push_back(sp);
  }
  return ctx;
}

std::uint64_t smooth_over(std::uint64_t n, const Context& ctx) {
  std::uint64_t smooth = 1;
  for (const auto& sp : ctx.small_primes) {
    while (n % sp.p == 0) {
      n /= sp.p;
      smooth *= sp.p;
    }
  }
  return smooth;
}

// factor(n) must return the factorization of any n <= x.
template <typename Factor>
LemmaChecks evaluate(std::uint64_t m, std::uint64_t phi_m, const Context& ctx, Factor&& factor) {
  LemmaChecks c;
  const std::uint64_t d = smooth_over(m, ctx);
  c.smooth_bound = static_cast<double>(d) <= ctx.log_x;

  for (const auto& sp : ctx.small_primes) {
    const std::uint64_t sq = sp.max_power * sp.max_power;
    if (phi_m % sq != 0) c.totient[0] = false;
    if (m % (sp.max_power * sp.p) == 0) c.totient[2] = false;
  }

  const std::uint64_t g = std::gcd(m, phi_m);
  if (g > 1) {
    const auto fg = factor(g);
    c.totient[1] = static_cast<double>(fg.back().prime) <= ctx.y;
  }

  c.totient[3] = smooth_over(m + phi_m, ctx) == d;

  double sum = 0;
  for (const auto& pp : factor(phi_m)) {
    if (static_cast<double>(pp.prime) > ctx.loglog_x) sum += 1.0 / static_cast<double>(pp.prime);
  }
  c.reciprocal_sum = sum <= 1.0;
  return c;
}

std::uint64_t totient(std::uint64_t m) {
  std::uint64_t phi = m;
  for (const auto& pp : factorize(m)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

void check_x(std::uint64_t x) {
  if (x < 16) throw std::invalid_argument("lemma diagnostics require x >= 16");
}

}  // namespace

double default_smooth_bound(std::uint64_t x) {
  check_x(x);
  const double l2 = std::log(std::log(static_cast<double>(x)));
  const double l3 = std::log(l2);
  if (!(l3 > 0)) return 2.0;
  return std::max(2.0, l2 / l3);
}

LemmaChecks check_lemmas(std::uint64_t m, std::uint64_t x, double y) {
  check_x(x);
  if (m == 0 || m > x) throw std::invalid_argument("check_lemmas requires 1 <= m <= x");
  const Context ctx = make_context(x, y);
  return evaluate(m, totient(m), ctx, [](std::uint64_t n) { return factorize(n); });
}

LemmaDiagnostics lemma_diagnostics(std::uint64_t x, std::optional<double> y, const SieveConfig& config) {
  check_x(x);
  const double y_value = y.value_or(default_smooth_bound(x));
  const Context ctx = make_context(x, y_value);
  const auto phi = tabulate(FunctionKind::phi, {1, x + 1}, config);
  const auto spf = smallest_prime_factors(x);
  const std::span<const std::uint32_t> spf_view(spf);

  std::uint64_t smooth_fail = 0, p1 = 0, p2 = 0, p3 = 0, p4 = 0, recip_fail = 0;
  const auto n = static_cast<std::int64_t>(x);
#pragma omp parallel for schedule(static) num_threads(config.worker_count) \
    reduction(+ : smooth_fail, p1, p2, p3, p4, recip_fail)
  for (std::int64_t i = 1; i <= n; ++i) {
    const auto m = static_cast<std::uint64_t>(i);
    const auto c = evaluate(m, phi(m), ctx, [&](std::uint64_t v) { return factorize(v, spf_view); });
    smooth_fail += !c.smooth_bound;
    p1 += !c.totient[0];
    p2 += !c.totient[1];
    p3 += !c.totient[2];
    p4 += !c.totient[3];
    recip_fail += !c.reciprocal_sum;
  }

  LemmaDiagnostics out;
  out.x = x;
  out.y = y_value;
  out.log_x = ctx.log_x;
  out.loglog_x = ctx.loglog_x;
  out.smooth_bound_failures = smooth_fail;
  out.totient_failures = {p1, p2, p3, p4};
  out.reciprocal_sum_failures = recip_fail;
  return out;
}

}  // namespace kfk
