#pragma once

#include <cstdint>

namespace kfk {

/// Closed-form densities that the sieve experiments converge to.
struct ConstantCatalog {
  double zeta2;
  double zeta3;
  double c_mod3;      // 1/3 + zeta(3)/(12 zeta(2)): density of k + tau(k) = 0 (mod 3)
  double k_density;   // 13 zeta(3)/(18 zeta(2)): density of K(y)
  double t0_density;  // 1/3 - 5 zeta(3)/(18 zeta(2))
  double phi_mean;    // 3/pi^2
  double phi_upper;   // 1 - 3/(4 pi^2)
};

ConstantCatalog catalog();

/// Apery's constant to 20 digits, used only as a cross-check.
inline constexpr long double kZeta3Literature = 1.2020569031595942854L;

struct SeriesValue {
  long double value;
  long double remainder_bound;  // |true value - value| <= remainder_bound
};

/// zeta(3) = 5/2 sum_{n>=1} (-1)^{n+1} / (n^3 binom(2n, n)); alternating, so the first
/// omitted term bounds the remainder.
SeriesValue zeta3_series(unsigned terms = 40);

/// Riemann zeta for real s > 1 by Euler-Maclaurin summation.
double zeta(double s);

/// L(s, chi_3) for real s > 1, summed in (3j+1, 3j+2) pairs with an integral tail.
double dirichlet_l_chi3(double s);

/// zeta(s) zeta(3s) / zeta(2s) * (1 - 27^-s) / (1 + 3^-s).
double closed_form_K(double s);
/// L(3s, chi_3) / L(s, chi_3).
double closed_form_T(double s);

/// Truncated Euler product over primes p <= prime_cutoff, p != 3, of
/// 1 + sum_{nu >= 1, nu != 2 (mod 3)} p^{-nu s}. Throws for s <= 1 or cutoff < 2.
double euler_product_K(double s, std::uint64_t prime_cutoff = 1'000'000);

/// Truncated product of the local factors of sum chi_3(k) (-1)^W(k) k^-s.
double euler_product_T(double s, std::uint64_t prime_cutoff = 1'000'000);

/// Same truncated product, regrouped as [prod (1 - chi_3(p) p^-s)] times the
/// L(3s, chi_3) local factors.
double euler_product_T_recombined(double s, std::uint64_t prime_cutoff = 1'000'000);

/// sum_{k <= limit, 3 does not divide k, 3 does not divide tau(k)} k^-s.
double direct_sum_K(double s, std::uint64_t limit = 1'000'000);
/// sum_{k <= limit, 3 does not divide tau(k)} chi_3(k) (-1)^W(k) k^-s.
double direct_sum_T(double s, std::uint64_t limit = 1'000'000);

/// (1/r_max) sum_{r <= r_max} (sigma(2^r - 1) / (2^r - 1))^2 for 1 <= r_max <= 50.
double mersenne_sigma_moment(unsigned r_max);

}  // namespace kfk
