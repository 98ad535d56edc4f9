#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "curves/curve_models.hpp"

namespace brsieve {

// L(T) = sum a_i T^i = prod (1 - alpha_i T) for a genus-g curve over F_q.
struct LPolynomial {
  BigInt q;
  unsigned genus = 0;
  std::vector<BigInt> coeffs;  // a_0 .. a_{2g}

  BigInt at_one() const;
  // chi(x) = x^{2g} L(1/x), the characteristic polynomial of Frobenius.
  ZPoly frobenius_charpoly() const;
  // s_1 .. s_count, where s_k = sum alpha_i^k.
  std::vector<BigInt> power_sums(unsigned count) const;
  // q^n + 1 - s_n
  BigInt predicted_count(unsigned n) const;
  // Throws kInvariantViolation on a_0 != 1, a broken functional equation or
  // a power sum outside the Weil bound.
  void validate() const;
  std::string format() const;
};

// Builds L from N_1..N_g (extra counts are checked against the prediction).
LPolynomial lpolynomial_from_counts(const BigInt& q, unsigned genus, std::span<const BigInt> counts);

LPolynomial lpolynomial(const FqHyperelliptic& curve, std::uint64_t budget = kDefaultCountBudget);
LPolynomial lpolynomial(const FqElliptic& curve, std::uint64_t budget = kDefaultCountBudget);

// |prod (alpha_i^n - 1)| = |Res(chi, x^n - 1)|.
BigInt jacobian_order(const LPolynomial& L, unsigned n);

struct ValuationRow {
  unsigned n = 0;
  unsigned r = 0;   // ell-adic valuation of the order
  BigInt m;         // prime-to-ell cofactor
  BigInt order;
};

std::vector<ValuationRow> ell_valuation_sequence(const LPolynomial& L, const BigInt& ell, unsigned n_max);

// q + 1 - 2g sqrt(q) > 0, decided exactly as (q+1)^2 > 4 g^2 q.
bool weil_guarantee(unsigned genus, const BigInt& q);

// Trace not divisible by p; prime base fields only.
bool is_ordinary(const FqElliptic& curve);

}  // namespace brsieve
