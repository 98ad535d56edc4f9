#pragma once

#include <cstdint>

#include "jacobian/elliptic_group.hpp"

namespace brsieve {

// E(F_q) = Z/n1 x Z/n2 with n1 | n2.
struct EllipticStructure {
  BigInt N;
  BigInt n1;
  BigInt n2;  // group exponent
  bool heuristic = false;
  unsigned samples = 0;
};

inline constexpr std::uint64_t kStructureEnumerationLimit = 100'000;

// Exact: the exponent is read off each Sylow subgroup, which is the image of
// multiplication by the prime-to-ell part of N. Requires q <= the limit.
EllipticStructure elliptic_structure(const FqElliptic& E);
// Monte Carlo: exponent as lcm of the orders of `samples` (>= 40) random points.
EllipticStructure elliptic_structure_sampled(const FqElliptic& E, unsigned samples, std::uint64_t seed);

// Exponent of the ell-Sylow subgroup of E(F_q), given N = #E(F_q). Points are
// enumerated lazily and the scan stops once an element of order ell^{v_ell(N)} appears.
BigInt elliptic_sylow_exponent(const FqElliptic& E, const BigInt& N, const BigInt& ell);

}  // namespace brsieve
