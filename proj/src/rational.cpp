#include "kfk/rational.hpp"

#include <algorithm>
#include <cctype>

namespace kfk {

namespace {

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 parse_digits(const std::string& digits, const std::string& whole) {
  if (digits.empty()) throw std::invalid_argument("malformed rational '" + whole + "'");
  u128 value = 0;
  for (const char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed rational '" + whole + "'");
    }
    value = value * 10 + static_cast<unsigned>(c - '0');
  }
  return value;
}

}  // namespace

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string s;
  while (value != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

void Rational::reduce() {
  const u128 g = gcd128(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    return Rational(parse_digits(text.substr(0, slash), text), parse_digits(text.substr(slash + 1), text));
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 18) throw std::invalid_argument("too many decimals in '" + text + "'");
    u128 den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::string int_part = text.substr(0, dot);
    const u128 whole = int_part.empty() ? 0 : parse_digits(int_part, text);
    return Rational(whole * den + (frac.empty() ? 0 : parse_digits(frac, text)), den);
  }
  return Rational(parse_digits(text, text));
}

}  // namespace kfk
