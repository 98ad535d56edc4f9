#pragma once

#include <utility>
#include <vector>

#include "ff/bigint.hpp"

namespace brsieve {

// Prime-power decomposition of a positive integer. `cofactor` is whatever
// could not be split (1 when the factorization is complete).
struct Factorization {
  std::vector<std::pair<BigInt, unsigned>> factors;  // primes strictly increasing
  BigInt cofactor = 1;

  bool complete() const { return cofactor == 1; }
  BigInt value() const;
  std::vector<BigInt> primes() const;
};

Factorization factor_integer(const BigInt& n);

// Product of the distinct primes dividing n.
BigInt radical(const BigInt& n);

// True iff every prime factor of n is <= bound.
bool is_smooth(const BigInt& n, const BigInt& bound);

// v_ell(n) and the ell-free cofactor; n != 0.
std::pair<unsigned, BigInt> split_valuation(const BigInt& n, const BigInt& ell);

// Largest divisor of n whose prime factors all divide d.
BigInt primary_part(const BigInt& n, const BigInt& d);

bool is_probable_prime(const BigInt& n);

}  // namespace brsieve
