// Serial reference kernels against the OpenMP kernels.
//   kfk_bench [x] [repeats]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "kfk/phi_distribution.hpp"
#include "kfk/representability.hpp"

using namespace kfk;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-22s %10.4f %10.4f %8.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t x = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 10'000'000;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  const SieveConfig cfg;
  std::printf("x = %llu, %u workers, best of %d\n", static_cast<unsigned long long>(x), cfg.worker_count, repeats);
  std::printf("%-22s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  for (const auto kind : {FunctionKind::omega, FunctionKind::tau, FunctionKind::phi}) {
    const std::string name = "tabulate " + std::string(kind_name(kind));
    row(name.c_str(), best_of(repeats, [&] { tabulate_reference(kind, {1, x + 1}); }),
        best_of(repeats, [&] { tabulate(kind, {1, x + 1}, cfg); }));
  }

  const auto tau = tabulate(FunctionKind::tau, {1, x + 1}, cfg);
  row("count_image tau", best_of(repeats, [&] { count_image_reference(tau, x); }),
      best_of(repeats, [&] { count_image(tau, x, cfg); }));

  const auto phi = tabulate(FunctionKind::phi, {1, x + 1}, cfg);
  const auto grid = uniform_grid(1000);
  row("empirical_cdf G=1000", best_of(repeats, [&] { empirical_cdf_reference(phi, x, grid); }),
      best_of(repeats, [&] { empirical_cdf(phi, x, grid, cfg); }));
  return 0;
}
