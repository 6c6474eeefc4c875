#ifndef COAL_RATIONAL_HPP
#define COAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace coal {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational; always stored fully reduced with a
/// positive denominator. All solver arithmetic goes through this type,
/// never floating point.
using Rational = boost::multiprecision::cpp_rational;

/// Serializes as "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q" with a positive denominator. Throws
/// std::invalid_argument on malformed input or a zero denominator.
inline Rational rational_from_string(const std::string& s) {
  auto digits = [](const std::string& part, bool allow_sign) {
    std::size_t i = allow_sign && !part.empty() && part[0] == '-' ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!digits(s, true)) throw std::invalid_argument("malformed: " + s);
      return Rational(Integer(s));
    }
    std::string num_part = s.substr(0, slash);
    std::string den_part = s.substr(slash + 1);
    if (!digits(num_part, true) || !digits(den_part, false))
      throw std::invalid_argument("malformed rational: " + s);
    Integer den(den_part);
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(Integer(num_part), den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

/// Largest integer s with s*s <= v (v >= 0).
inline Integer isqrt_floor(const Integer& v) {
  if (v < 0) throw std::invalid_argument("isqrt of negative value");
  if (v == 0) return 0;
  Integer x = v, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + v / x) / 2;
  }
  return x;
}

/// Smallest integer s with s*s >= v.
inline Integer isqrt_ceil(const Integer& v) {
  Integer f = isqrt_floor(v);
  return f * f == v ? f : f + 1;
}

}  // namespace coal

#endif  // COAL_RATIONAL_HPP
