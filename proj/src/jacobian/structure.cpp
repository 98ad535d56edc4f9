#include "jacobian/structure.hpp"

#include "jacobian/group.hpp"

namespace brsieve {

BigInt elliptic_sylow_exponent(const FqElliptic& E, const BigInt& N, const BigInt& ell) {
  const FiniteField& F = *E.field();
  if (F.order() > kStructureEnumerationLimit) {
    fail(ErrorCode::kBudgetExceeded, "structure enumeration over " + F.describe() + " exceeds the limit");
  }
  auto [e, m] = split_valuation(N, ell);
  if (e == 0) return 1;
  const BigInt full = ipow(ell, e);
  EllipticGroup G(E);
  BigInt best = 1;
  for (std::uint64_t i = 0; i < F.order() && best < full; ++i) {
    for (const auto& P : G.lift_x(F.element(i))) {
      EllipticPoint Q = scalar_mul(G, m, P);
      BigInt ord = 1;
      while (!(Q == G.identity())) {
        Q = scalar_mul(G, ell, Q);
        ord *= ell;
      }
      if (ord > best) best = ord;
    }
  }
  return best;
}

EllipticStructure elliptic_structure(const FqElliptic& E) {
  EllipticStructure s;
  s.N = big(count_points(E));
  s.n2 = 1;
  for (const auto& [ell, e] : factor_integer(s.N).factors) s.n2 *= elliptic_sylow_exponent(E, s.N, ell);
  s.n1 = s.N / s.n2;
  return s;
}

EllipticStructure elliptic_structure_sampled(const FqElliptic& E, unsigned samples, std::uint64_t seed) {
  if (samples < 40) fail(ErrorCode::kInvalidArgument, "sampling mode needs at least 40 points");
  EllipticGroup G(E);
  EllipticStructure s;
  s.N = big(count_points(E));
  const Factorization fact = factor_integer(s.N);
  std::mt19937_64 rng(seed);
  s.n2 = 1;
  for (unsigned i = 0; i < samples; ++i) s.n2 = lcm(s.n2, element_order(G, G.random_element(rng), fact));
  s.n1 = s.N / s.n2;
  s.heuristic = true;
  s.samples = samples;
  return s;
}

}  // namespace brsieve
