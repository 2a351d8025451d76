#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "cogmean/error.hpp"

namespace cogmean {

using BigInt = boost::multiprecision::cpp_int;
/// Normalized arbitrary-precision rational (gcd(num, den) = 1, den > 0).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned k) {
  BigInt r = 1;
  r <<= k;
  return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::RangeError, "zero denominator");
  return Rational(num, den);
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const BigInt den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

namespace detail {

inline BigInt parse_bigint(std::string_view s) {
  if (s.empty()) throw Error(Errc::ParseError, "empty integer");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw Error(Errc::ParseError, "sign without digits", i);
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw Error(Errc::ParseError, "bad digit in '" + std::string(s) + "'", i);
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace detail

/// Accepts "p/q" or "p".
inline Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_bigint(s));
  const BigInt num = detail::parse_bigint(s.substr(0, slash));
  const BigInt den = detail::parse_bigint(s.substr(slash + 1));
  if (den == 0) throw Error(Errc::ParseError, "zero denominator", slash + 1);
  return Rational(num, den);
}

/// Truncated decimal expansion with `digits` fractional digits, computed by
/// exact integer division. Presentation only.
inline std::string decimal_approx(const Rational& r, unsigned digits = 12) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt num = numerator(r);
  const BigInt den = denominator(r);
  const bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const BigInt scaled = num * scale / den;
  std::string frac = BigInt(scaled % scale).str();
  frac.insert(0, digits - frac.size(), '0');
  std::string out = neg ? "-" : "";
  out += BigInt(scaled / scale).str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace cogmean
