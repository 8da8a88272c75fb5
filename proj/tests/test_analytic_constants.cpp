#include <doctest.h>

#include <cmath>

#include "kfk/analytic_constants.hpp"
#include "kfk/residue_mod3.hpp"
#include "oracle.hpp"

using namespace kfk;

TEST_CASE("catalog invariants") {
  const auto c = catalog();
  CHECK(c.zeta2 == doctest::Approx(1.644934066848226).epsilon(1e-15));
  CHECK(std::abs(c.zeta3 - static_cast<double>(kZeta3Literature)) < 1e-15);
  CHECK(c.c_mod3 == doctest::Approx(c.t0_density + c.k_density / 2).epsilon(1e-14));
  CHECK(c.c_mod3 > 0.394);
  CHECK(c.c_mod3 < 0.3943);
  CHECK(c.c_mod3 - 1.0 / 3 >= 0.06);
  CHECK(c.k_density == doctest::Approx(0.527773).epsilon(1e-6));
  CHECK(c.t0_density == doctest::Approx(0.130343).epsilon(1e-5));
  CHECK(c.phi_mean == doctest::Approx(0.303964).epsilon(1e-6));
  CHECK(c.phi_upper < 0.93);
  CHECK(c.phi_upper == doctest::Approx(1 - c.phi_mean / 4));
}

TEST_CASE("zeta(3) series") {
  const auto z = zeta3_series();
  CHECK(std::abs(z.value - kZeta3Literature) <= z.remainder_bound + 1e-18L);
  const auto few = zeta3_series(5);
  CHECK(std::abs(few.value - kZeta3Literature) <= few.remainder_bound);
  CHECK(few.remainder_bound > 0);
}

TEST_CASE("zeta and L") {
  CHECK(zeta(2) == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-14));
  CHECK(zeta(4) == doctest::Approx(std::pow(M_PI, 4) / 90).epsilon(1e-14));
  CHECK(zeta(3) == doctest::Approx(static_cast<double>(kZeta3Literature)).epsilon(1e-14));
  CHECK(zeta(1.5) == doctest::Approx(2.612375348685488).epsilon(1e-13));
  CHECK(dirichlet_l_chi3(2) == doctest::Approx(0.7813024128964862).epsilon(1e-12));
  // L(3, chi3) = 4 pi^3 / (81 sqrt 3)
  CHECK(dirichlet_l_chi3(3) == doctest::Approx(4 * std::pow(M_PI, 3) / (81 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK_THROWS_AS(zeta(1), std::invalid_argument);
  CHECK_THROWS_AS(dirichlet_l_chi3(0.5), std::invalid_argument);
}

TEST_CASE("Dirichlet series: closed forms, products and sums") {
  for (const double s : {2.0, 3.0}) {
    const double k = closed_form_K(s);
    const double t = closed_form_T(s);
    CHECK(std::abs(euler_product_K(s, 1'000'000) - k) <= 1e-5);
    CHECK(std::abs(euler_product_T(s, 1'000'000) - t) <= 1e-5);
    CHECK(std::abs(euler_product_T_recombined(s, 1'000'000) - t) <= 1e-5);
    CHECK(std::abs(direct_sum_K(s, 1'000'000) - k) <= 1e-5);
    CHECK(std::abs(direct_sum_T(s, 1'000'000) - t) <= 1e-5);
  }
  CHECK(std::abs(euler_product_K(3, 100'000) - direct_sum_K(3, 1'000'000)) <= 1e-6);
  CHECK(std::abs(euler_product_T(2, 100'000) - closed_form_T(2)) <= 1e-6);
  // The K product converges like the prime tail sum of p^-2, about 1.1e-6 at 10^5.
  CHECK(std::abs(euler_product_K(2, 100'000) - closed_form_K(2)) <= 2e-6);
  CHECK(std::abs(euler_product_K(2, 1'000'000) - closed_form_K(2)) <= 1e-6);
  double previous = 0;
  for (const std::uint64_t cutoff : {10ULL, 100ULL, 1000ULL, 10'000ULL, 100'000ULL}) {
    const double v = euler_product_K(2, cutoff);
    CHECK(v >= previous - 1e-9);
    previous = v;
  }
  const double u = 0.25;
  CHECK(euler_product_K(2, 2) == doctest::Approx(1 + (u + u * u * u) / (1 - u * u * u)).epsilon(1e-15));
  CHECK(euler_product_T(2, 2) == doctest::Approx(1 + (u - u * u * u) / (1 + u * u * u)).epsilon(1e-15));
  CHECK(euler_product_T_recombined(2, 2) == doctest::Approx(euler_product_T(2, 2)).epsilon(1e-15));
  CHECK(euler_product_T(2, 100'000) ==
        doctest::Approx(euler_product_T_recombined(2, 100'000)).epsilon(1e-12));
  CHECK_THROWS_AS(euler_product_K(1, 100), std::invalid_argument);
  CHECK_THROWS_AS(euler_product_T(2, 1), std::invalid_argument);
}

TEST_CASE("direct sums against the oracle") {
  double k_sum = 0, t_sum = 0;
  for (std::uint64_t k = 1; k <= 3000; ++k) {
    if (k % 3 == 0 || oracle::tau(k) % 3 == 0) continue;
    unsigned w = 0;
    for (const auto& f : oracle::factor(k)) w += f.e % 3 == 1;
    const double term = 1.0 / (static_cast<double>(k) * static_cast<double>(k));
    k_sum += term;
    t_sum += chi3(k) * (w % 2 == 0 ? term : -term);
  }
  CHECK(direct_sum_K(2, 3000) == doctest::Approx(k_sum).epsilon(1e-13));
  CHECK(direct_sum_T(2, 3000) == doctest::Approx(t_sum).epsilon(1e-12));
}

TEST_CASE("Mersenne sigma moment") {
  CHECK(mersenne_sigma_moment(1) == doctest::Approx(1.0));
  // r = 2: sigma(3)/3 = 4/3
  CHECK(mersenne_sigma_moment(2) == doctest::Approx((1.0 + 16.0 / 9) / 2));
  const double m40 = mersenne_sigma_moment(40);
  CHECK(m40 >= 1);
  CHECK(m40 <= 4);
  CHECK_NOTHROW(mersenne_sigma_moment(50));
  CHECK_THROWS_AS(mersenne_sigma_moment(51), std::out_of_range);
  CHECK_THROWS_AS(mersenne_sigma_moment(0), std::invalid_argument);
}
