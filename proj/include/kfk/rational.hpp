#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kfk {

using u128 = unsigned __int128;

std::string to_string(u128 value);

/// Nonnegative exact fraction with 128-bit numerator and denominator, kept reduced.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(u128 num, u128 den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational denominator must be nonzero");
    reduce();
  }

  u128 num() const { return num_; }
  u128 den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "a/b", or "a" when the denominator is 1.
  std::string str() const;

  /// Parses "a", "a/b" or a plain decimal such as "1.5".
  static Rational parse(const std::string& text);

  // Cross-multiplication; operands stay below 2^64 in practice so products fit.
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void reduce();

  u128 num_ = 0;
  u128 den_ = 1;
};

}  // namespace kfk
