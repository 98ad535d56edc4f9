#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "common/error.hpp"

namespace brsieve {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt big(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline BigInt big_signed(std::int64_t v) {
  if (v >= 0) return big(static_cast<std::uint64_t>(v));
  // -(v+1) avoids overflow at INT64_MIN
  BigInt r = big(static_cast<std::uint64_t>(-(v + 1)));
  r += 1;
  return -r;
}

inline bool fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) fail(ErrorCode::kInvalidArgument, "integer does not fit in 64 bits: " + v.get_str());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Floor-mod into [0, m).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::uint64_t mod_u64(const BigInt& a, std::uint64_t m) {
  return to_u64(mod_floor(a, big(m)));
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divisible(const BigInt& a, const BigInt& d) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact integer square root test.
inline bool is_perfect_square(const BigInt& a) {
  return sgn(a) >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

}  // namespace brsieve
