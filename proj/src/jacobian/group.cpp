#include "jacobian/group.hpp"

#include "ff/modular.hpp"

namespace brsieve {

AmbientGroupInfo make_ambient_info(const BigInt& N, const BigInt& d) {
  if (d == 0) fail(ErrorCode::kInvalidArgument, "d must be nonzero");
  if (N <= 0) fail(ErrorCode::kInvalidArgument, "group order must be positive");
  AmbientGroupInfo info;
  info.N = N;
  info.d = abs(d);
  info.factorization = factor_integer(N);
  info.N_d = primary_part(N, info.d);
  info.N_perp = N / info.N_d;
  BigInt inv = 0;
  if (info.N_d > 1) mpz_invert(inv.get_mpz_t(), info.N_perp.get_mpz_t(), info.N_d.get_mpz_t());
  info.e = mod_floor(info.N_perp * inv, N);
  info.e_perp = mod_floor(1 - info.e, N);
  return info;
}

CyclicGroup::CyclicGroup(std::uint64_t n) : n_(n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "cyclic group order must be positive");
}

CyclicGroup::Element CyclicGroup::add(Element a, Element b) const { return modular::add(a, b, n_); }

}  // namespace brsieve
