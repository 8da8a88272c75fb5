#include "kfk/analytic_constants.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kfk/arith_sieve.hpp"
#include "kfk/residue_mod3.hpp"

namespace kfk {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

// B_2, B_4, ..., B_20
constexpr std::array<long double, 10> kBernoulli = {
    1.0L / 6,         -1.0L / 30,  1.0L / 42,       -1.0L / 30,         5.0L / 66,
    -691.0L / 2730,   7.0L / 6,    -3617.0L / 510,  43867.0L / 798,     -174611.0L / 330,
};

void check_s(double s) {
  if (!(s > 1.0)) throw std::invalid_argument("Dirichlet series diverges for s <= 1");
}

void check_cutoff(std::uint64_t cutoff) {
  if (cutoff < 2) throw std::invalid_argument("prime cutoff must be >= 2");
}

long double zeta_long(long double s) {
  constexpr int N = 20;
  long double sum = 0;
  for (int n = N - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -s);
  const long double big_n = N;
  sum += std::pow(big_n, 1 - s) / (s - 1) + std::pow(big_n, -s) / 2;
  // Euler-Maclaurin corrections B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
  long double rising = s;
  long double factorial = 2;
  long double power = std::pow(big_n, -s - 1);
  for (std::size_t j = 0; j < kBernoulli.size(); ++j) {
    sum += kBernoulli[j] / factorial * rising * power;
    const long double k = 2 * static_cast<long double>(j) + 2;
    rising *= (s + k - 1) * (s + k);
    factorial *= (k + 1) * (k + 2);
    power /= big_n * big_n;
  }
  return sum;
}

long double l_chi3_long(long double s) {
  // (3j+1)^-s - (3j+2)^-s is positive and decreasing in j.
  constexpr std::uint64_t kPairs = 1'000'000;
  long double sum = 0;
  for (std::uint64_t j = kPairs; j-- > 0;) {
    const long double a = 3.0L * static_cast<long double>(j);
    sum += std::pow(a + 1, -s) - std::pow(a + 2, -s);
  }
  // Midpoint rule for the tail: sum_{j >= J} g(j) ~ integral of g from J - 1/2.
  const long double t = static_cast<long double>(kPairs) - 0.5L;
  sum += (std::pow(3 * t + 1, 1 - s) - std::pow(3 * t + 2, 1 - s)) / (3 * (s - 1));
  return sum;
}

}  // namespace

SeriesValue zeta3_series(unsigned terms) {
  long double sum = 0;
  long double binom = 1;  // binom(2n, n)
  long double next = 0;
  for (unsigned n = 1; n <= terms + 1; ++n) {
    const long double nn = n;
    binom *= (2 * nn - 1) * (2 * nn) / (nn * nn);
    const long double term = 1.0L / (nn * nn * nn * binom);
    if (n == terms + 1) {
      next = term;
      break;
    }
    sum += (n % 2 == 1) ? term : -term;
  }
  return {2.5L * sum, 2.5L * next};
}

ConstantCatalog catalog() {
  const long double z2 = kPi * kPi / 6;
  const long double z3 = zeta3_series().value;
  ConstantCatalog c{};
  c.zeta2 = static_cast<double>(z2);
  c.zeta3 = static_cast<double>(z3);
  c.c_mod3 = static_cast<double>(1.0L / 3 + z3 / (12 * z2));
  c.k_density = static_cast<double>(13 * z3 / (18 * z2));
  c.t0_density = static_cast<double>(1.0L / 3 - 5 * z3 / (18 * z2));
  c.phi_mean = static_cast<double>(3 / (kPi * kPi));
  c.phi_upper = static_cast<double>(1 - 3 / (4 * kPi * kPi));
  return c;
}

double zeta(double s) {
  check_s(s);
  return static_cast<double>(zeta_long(s));
}

double dirichlet_l_chi3(double s) {
  check_s(s);
  return static_cast<double>(l_chi3_long(s));
}

double closed_form_K(double s) {
  check_s(s);
  const long double ls = s;
  return static_cast<double>(zeta_long(ls) * zeta_long(3 * ls) / zeta_long(2 * ls) *
                             (1 - std::pow(27.0L, -ls)) / (1 + std::pow(3.0L, -ls)));
}

double closed_form_T(double s) {
  check_s(s);
  return static_cast<double>(l_chi3_long(3.0L * s) / l_chi3_long(s));
}

double euler_product_K(double s, std::uint64_t prime_cutoff) {
  check_s(s);
  check_cutoff(prime_cutoff);
  long double product = 1;
  for (const std::uint64_t p : primes_up_to(prime_cutoff)) {
    if (p == 3) continue;
    const long double u = std::pow(static_cast<long double>(p), -static_cast<long double>(s));
    const long double u3 = u * u * u;
    product *= 1 + (u + u3) / (1 - u3);
  }
  return static_cast<double>(product);
}

double euler_product_T(double s, std::uint64_t prime_cutoff) {
  check_s(s);
  check_cutoff(prime_cutoff);
  long double product = 1;
  for (const std::uint64_t p : primes_up_to(prime_cutoff)) {
    const long double u = std::pow(static_cast<long double>(p), -static_cast<long double>(s));
    const long double u3 = u * u * u;
    if (p % 3 == 1) {
      product *= 1 + (-u + u3) / (1 - u3);
    } else if (p % 3 == 2) {
      product *= 1 + (u - u3) / (1 + u3);
    }
  }
  return static_cast<double>(product);
}

double euler_product_T_recombined(double s, std::uint64_t prime_cutoff) {
  check_s(s);
  check_cutoff(prime_cutoff);
  long double inverse_l = 1;
  long double l3 = 1;
  for (const std::uint64_t p : primes_up_to(prime_cutoff)) {
    const long double lp = p;
    const long double u = std::pow(lp, -static_cast<long double>(s));
    const long double p3s = std::pow(lp, 3.0L * static_cast<long double>(s));
    inverse_l *= 1 - chi3(p) * u;
    if (p % 3 == 1) {
      l3 *= 1 + 1 / (p3s - 1);
    } else if (p % 3 == 2) {
      l3 *= 1 - 1 / (p3s + 1);
    }
  }
  return static_cast<double>(inverse_l * l3);
}

double direct_sum_K(double s, std::uint64_t limit) {
  check_s(s);
  const auto tau = tabulate(FunctionKind::tau, {1, limit + 1});
  long double sum = 0;
  for (std::uint64_t k = limit; k >= 1; --k) {
    if (k % 3 != 0 && tau(k) % 3 != 0) {
      sum += std::pow(static_cast<long double>(k), -static_cast<long double>(s));
    }
  }
  return static_cast<double>(sum);
}

double direct_sum_T(double s, std::uint64_t limit) {
  check_s(s);
  const auto tau = tabulate(FunctionKind::tau, {1, limit + 1});
  const auto spf = smallest_prime_factors(limit);
  long double sum = 0;
  for (std::uint64_t k = limit; k >= 1; --k) {
    if (k % 3 == 0 || tau(k) % 3 == 0) continue;
    unsigned w = 0;
    for (const auto& pp : factorize(k, spf)) w += pp.exponent % 3 == 1;
    const long double term = std::pow(static_cast<long double>(k), -static_cast<long double>(s));
    sum += chi3(k) * ((w % 2 == 0) ? term : -term);
  }
  return static_cast<double>(sum);
}

double mersenne_sigma_moment(unsigned r_max) {
  if (r_max == 0) throw std::invalid_argument("r_max must be >= 1");
  if (r_max > 50) throw std::out_of_range("r_max must be <= 50");
  long double total = 0;
  for (unsigned r = 1; r <= r_max; ++r) {
    const std::uint64_t m = (std::uint64_t{1} << r) - 1;
    // sigma(m)/m = prod over p^e || m of (1 + 1/p + ... + 1/p^e)
    long double ratio = 1;
    for (const auto& pp : factorize(m)) {
      long double local = 1, inv = 1;
      for (unsigned e = 0; e < pp.exponent; ++e) {
        inv /= static_cast<long double>(pp.prime);
        local += inv;
      }
      ratio *= local;
    }
    total += ratio * ratio;
  }
  return static_cast<double>(total / r_max);
}

}  // namespace kfk
