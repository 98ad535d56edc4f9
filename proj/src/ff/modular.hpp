#pragma once

#include <vector>

#include <cstdint>

#include "ff/bigint.hpp"

namespace brsieve::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 add(u64 a, u64 b, u64 m) {
  u64 s = a + b;  // both < m < 2^63, no wrap
  return s >= m ? s - m : s;
}

inline u64 sub(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 pow(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul(r, base, m);
    base = mul(base, base, m);
    e >>= 1;
  }
  return r;
}

// Inverse of a modulo m (gcd(a, m) must be 1).
u64 inverse(u64 a, u64 m);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

// Primes in [lo, hi], increasing.
std::vector<u64> primes_between(u64 lo, u64 hi);

// Legendre symbol (a | p) for an odd prime p via Euler's criterion.
int legendre(const BigInt& a, u64 p);

// Square root modulo an odd prime (Tonelli-Shanks); a must be a square.
u64 sqrt_mod(u64 a, u64 p);

}  // namespace brsieve::modular
