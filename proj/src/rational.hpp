#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace npc {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar.  Kept canonical by the backend: gcd(num,den)=1,
// den>0.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long n) { return Rational(n); }

inline Rational rat(long long n, long long d) {
  if (d == 0) throw value_error("rational with zero denominator");
  return Rational(BigInt(n), BigInt(d));
}

inline BigInt rat_num(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline BigInt rat_den(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool rat_is_integer(const Rational& q) { return rat_den(q) == 1; }

// "7", "-3/4"; denominator suppressed when 1.
inline std::string rat_to_string(const Rational& q) {
  std::string s = rat_num(q).str();
  if (!rat_is_integer(q)) s += "/" + rat_den(q).str();
  return s;
}

inline long long to_longlong(const BigInt& z) {
  if (z < std::numeric_limits<long long>::min() ||
      z > std::numeric_limits<long long>::max())
    throw value_error("integer out of 64-bit range: " + z.str());
  return z.convert_to<long long>();
}

}  // namespace npc
