#pragma once

// Naive trial-division versions of everything the sieves compute. Deliberately slow and
// independent of the library.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

struct Factor {
  std::uint64_t p;
  unsigned e;
};

inline std::vector<Factor> factor(std::uint64_t n) {
  std::vector<Factor> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::uint64_t omega(std::uint64_t n) { return factor(n).size(); }

inline std::uint64_t tau(std::uint64_t n) {
  std::uint64_t t = 1;
  for (const auto& f : factor(n)) t *= f.e + 1;
  return t;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (const auto& f : factor(n)) r = r / f.p * (f.p - 1);
  return r;
}

inline std::uint64_t sigma(std::uint64_t n) {
  std::uint64_t s = 1;
  for (const auto& f : factor(n)) {
    std::uint64_t local = 1, pk = 1;
    for (unsigned i = 0; i < f.e; ++i) {
      pk *= f.p;
      local += pk;
    }
    s *= local;
  }
  return s;
}

inline std::uint64_t lpf(std::uint64_t n) {
  const auto f = factor(n);
  return f.empty() ? 1 : f.back().p;
}

inline std::uint64_t squarefree(std::uint64_t n) {
  for (const auto& f : factor(n)) {
    if (f.e > 1) return 0;
  }
  return 1;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// phi by counting coprime residues, for small n only.
inline std::uint64_t phi_by_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += gcd(k, n) == 1;
  return c;
}

inline std::uint64_t tau_by_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

// s -> #{n <= x with exactly s preimages k <= x}, via an ordered map over images.
template <class F>
std::map<std::uint64_t, std::uint64_t> image_histogram(std::uint64_t x, F f) {
  std::map<std::uint64_t, std::uint64_t> preimages;
  for (std::uint64_t k = 1; k <= x; ++k) {
    const std::uint64_t n = k + f(k);
    if (n <= x) ++preimages[n];
  }
  std::map<std::uint64_t, std::uint64_t> hist;
  hist[0] = x - preimages.size();
  for (const auto& [n, s] : preimages) ++hist[s];
  return hist;
}

}  // namespace oracle
