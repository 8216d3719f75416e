#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include "error.hpp"
#include "rational.hpp"

namespace npc {

// Element of GF(p), p an odd prime < 2^31.  The modulus travels with the
// value; binary operations require equal moduli.
struct Fp {
  uint32_t v = 0;
  uint32_t p = 0;

  Fp() = default;
  Fp(uint32_t value, uint32_t prime) : v(value % prime), p(prime) {}

  static Fp from_int(long long n, uint32_t prime) {
    long long r = n % static_cast<long long>(prime);
    if (r < 0) r += prime;
    return Fp(static_cast<uint32_t>(r), prime);
  }

  bool is_zero() const { return v == 0; }

  friend Fp operator+(Fp a, Fp b) {
    assert(a.p == b.p);
    uint64_t s = static_cast<uint64_t>(a.v) + b.v;
    if (s >= a.p) s -= a.p;
    return Fp(static_cast<uint32_t>(s), a.p);
  }
  friend Fp operator-(Fp a, Fp b) {
    assert(a.p == b.p);
    uint64_t s = static_cast<uint64_t>(a.v) + a.p - b.v;
    if (s >= a.p) s -= a.p;
    return Fp(static_cast<uint32_t>(s), a.p);
  }
  friend Fp operator*(Fp a, Fp b) {
    assert(a.p == b.p);
    return Fp(static_cast<uint32_t>(static_cast<uint64_t>(a.v) * b.v % a.p),
              a.p);
  }
  friend Fp operator-(Fp a) {
    return Fp(a.v == 0 ? 0 : a.p - a.v, a.p);
  }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v && a.p == b.p; }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  Fp inv() const {
    if (v == 0) throw value_error("division by zero in GF(p)");
    // extended Euclid on (v, p)
    int64_t t = 0, newt = 1;
    int64_t r = p, newr = v;
    while (newr != 0) {
      int64_t q = r / newr;
      int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    assert(r == 1);
    if (t < 0) t += p;
    return Fp(static_cast<uint32_t>(t), p);
  }

  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

  std::string str() const { return std::to_string(v); }
};

// Deterministic Miller-Rabin, exact for all 32-bit inputs.
inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto powmod = [n](uint64_t b, uint64_t e) {
    uint64_t r = 1;
    b %= n;
    while (e) {
      if (e & 1) r = r * b % n;
      b = b * b % n;
      e >>= 1;
    }
    return r;
  };
  for (uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Image of an exact rational in GF(p).  Throws when p divides the
// denominator; the caller should pick a different prime.
inline Fp reduce_rational(const Rational& q, uint32_t p) {
  BigInt num = rat_num(q) % p;
  BigInt den = rat_den(q) % p;
  if (den == 0)
    throw value_error("denominator of " + rat_to_string(q) +
                      " vanishes mod " + std::to_string(p) +
                      "; choose a different prime");
  long long n = num.convert_to<long long>();
  if (n < 0) n += p;
  Fp fn(static_cast<uint32_t>(n), p);
  Fp fd(static_cast<uint32_t>(den.convert_to<long long>()), p);
  return fn * fd.inv();
}

}  // namespace npc
