#include "ff/modular.hpp"

#include <algorithm>
#include <array>

namespace brsieve::modular {

u64 inverse(u64 a, u64 m) {
  // extended Euclid on signed 128-bit to stay exact near 2^63
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) fail(ErrorCode::kInvalidArgument, "element is not invertible modulo " + std::to_string(m));
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

std::vector<u64> primes_between(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 v = std::max<u64>(lo, 2); v <= hi && v >= lo; ++v) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre(const BigInt& a, u64 p) {
  if (p == 2 || !is_prime(p)) fail(ErrorCode::kInvalidArgument, "legendre: modulus must be an odd prime, got " + std::to_string(p));
  u64 r = mod_u64(a, p);
  if (r == 0) return 0;
  return pow(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (pow(a, (p - 1) / 2, p) != 1) fail(ErrorCode::kInvalidArgument, "sqrt_mod: not a square");
  if (p % 4 == 3) return pow(a, (p + 1) / 4, p);
  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (pow(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s;
  u64 c = pow(z, q, p);
  u64 t = pow(a, q, p);
  u64 r = pow(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mul(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mul(b, b, p);
    m = i;
    c = mul(b, b, p);
    t = mul(t, c, p);
    r = mul(r, b, p);
  }
  return r;
}

}  // namespace brsieve::modular
