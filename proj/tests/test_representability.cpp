#include <doctest.h>

#include <cmath>

#include "kfk/errors.hpp"
#include "kfk/representability.hpp"
#include "oracle.hpp"

using namespace kfk;

namespace {

FunctionTable custom(std::uint64_t x, std::uint64_t (*f)(std::uint64_t)) {
  std::vector<std::uint64_t> v(x);
  for (std::uint64_t k = 1; k <= x; ++k) v[k - 1] = f(k);
  return FunctionTable(FunctionKind::user, {1, x + 1}, std::move(v));
}

std::uint64_t zero(std::uint64_t) { return 0; }
std::uint64_t identity(std::uint64_t k) { return k; }
std::uint64_t parity(std::uint64_t k) { return k % 2; }

}  // namespace

TEST_CASE("image counts at x = 10") {
  const auto omega = count_image(tabulate(FunctionKind::omega, {1, 11}), 10);
  CHECK(omega.n_plus == 8);

  const auto tau = count_image(tabulate(FunctionKind::tau, {1, 11}), 10);
  CHECK(tau.n_plus == 6);
  CHECK(tau.histogram.at(0) == 4);
  CHECK(tau.histogram.at(1) == 5);
  CHECK(tau.histogram.at(2) == 1);
  CHECK(tau.in_range_preimages == 7);

  CHECK(count_image(custom(10, identity), 10).n_plus == 5);
  CHECK(count_image(tabulate(FunctionKind::phi, {1, 11}), 10).n_plus == 6);
}

TEST_CASE("degenerate functions") {
  for (const std::uint64_t x : {1ULL, 2ULL, 17ULL, 1000ULL}) {
    const auto z = count_image(custom(x, zero), x);
    CHECK(z.n_plus == x);
    CHECK(z.histogram.at(0) == 0);
    CHECK(z.histogram.at(1) == x);

    const auto id = count_image(custom(x, identity), x);
    CHECK(id.n_plus == x / 2);
    if (x >= 2) CHECK(id.histogram.at(1) == x / 2);
    CHECK(id.histogram.at(0) == x - x / 2);
  }
}

TEST_CASE("histogram matches a map-based oracle") {
  const std::uint64_t x = 10'000;
  const FunctionKind kinds[] = {FunctionKind::omega, FunctionKind::tau, FunctionKind::phi, FunctionKind::sigma};
  std::uint64_t (*oracles[])(std::uint64_t) = {oracle::omega, oracle::tau, oracle::phi, oracle::sigma};
  for (int i = 0; i < 4; ++i) {
    const auto table = tabulate(kinds[i], {1, x + 1});
    for (const std::uint64_t y : std::initializer_list<std::uint64_t>{1, 2, 99, 4321, x}) {
      const auto report = count_image(table, y);
      REQUIRE(report.histogram == oracle::image_histogram(y, oracles[i]));
      CHECK(report == count_image_reference(table, y));
      CHECK(report == count_image(table, y, {.worker_count = 4}));
    }
  }
}

TEST_CASE("multiplicities beyond the saturation threshold") {
  // f(k) = 300 - k for k < 300 sends 299 arguments to 300.
  const std::uint64_t x = 1000;
  std::vector<std::uint64_t> v(x);
  for (std::uint64_t k = 1; k <= x; ++k) v[k - 1] = k < 300 ? 300 - k : x;
  const FunctionTable f(FunctionKind::user, {1, x + 1}, v);
  const auto r = count_image(f, x);
  CHECK(r.histogram.at(299) == 1);
  CHECK(r.n_plus == 1);
  CHECK(r == count_image_reference(f, x));
  CHECK(r.histogram == oracle::image_histogram(x, [&](std::uint64_t k) { return v[k - 1]; }));
}

TEST_CASE("density sweep") {
  const std::uint64_t grid[] = {10};
  CHECK(density_sweep(FunctionKind::tau, grid)[0].density() == doctest::Approx(0.6));
  CHECK(density_sweep(FunctionKind::phi, grid)[0].exact() == Rational(3, 5));

  const std::uint64_t many[] = {1, 10, 100, 1000, 5000};
  const auto table = tabulate(FunctionKind::omega, {1, 5001});
  const auto sweep = density_sweep(table, many);
  REQUIRE(sweep.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(sweep[i].n_plus == count_image(table, many[i]).n_plus);

  const std::uint64_t unsorted[] = {10, 10};
  CHECK_THROWS_AS(density_sweep(table, unsorted), std::invalid_argument);
  CHECK_THROWS_AS(count_image(table, 0), std::invalid_argument);
  CHECK_THROWS_AS(count_image(table, 5001), std::invalid_argument);
}

TEST_CASE("non-representable lower bound") {
  const auto tau = theorem3_bound(tabulate(FunctionKind::tau, {1, 11}), 10, Rational(1));
  CHECK(tau.bound == Rational(27, 40));
  CHECK(tau.actual == 4);
  CHECK(tau.holds());

  const auto phi = theorem3_bound(tabulate(FunctionKind::phi, {1, 11}), 10, Rational(1));
  CHECK(phi.bound == Rational(4, 5));
  CHECK(phi.actual == 4);

  const auto par = theorem3_bound(custom(10, parity), 10, Rational(1));
  CHECK(par.bound == Rational(1, 8));
  CHECK(par.actual == 5);

  // omega(2) = 1 > 2/3 is the first violation.
  try {
    theorem3_bound(tabulate(FunctionKind::omega, {1, 11}), 10, Rational(1, 3));
    FAIL("expected precondition_error");
  } catch (const precondition_error& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("bound holds for the standard functions") {
  for (const auto kind : {FunctionKind::omega, FunctionKind::tau, FunctionKind::phi}) {
    const auto table = tabulate(kind, {1, 100'001});
    for (const std::uint64_t x : {1ULL, 2ULL, 10ULL, 1000ULL, 100'000ULL}) {
      const auto b = theorem3_bound(table, x, Rational(1));
      CHECK(b.holds());
      CHECK(b.actual == count_image(table, x).non_representable());
    }
  }
}

TEST_CASE("mean totient") {
  const auto small = phi_upper_constant_check(10);
  CHECK(small.lhs == doctest::Approx(0.32));
  CHECK(small.target == doctest::Approx(3 / (M_PI * M_PI)));
  const auto big = phi_upper_constant_check(1'000'000);
  CHECK(std::abs(big.lhs - 0.30396) <= 0.0005);
}
