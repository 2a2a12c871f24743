#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gw {

/// Exact arbitrary-precision rational. Always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
inline Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: " + std::string(text));
  BigInt n(std::string(num.front() == '+' ? num.substr(1) : num));
  BigInt d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(n, d);
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace gw
