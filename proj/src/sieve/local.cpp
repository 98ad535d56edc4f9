#include "sieve/local.hpp"

#include <numeric>

#include "ff/factor.hpp"
#include "ff/modular.hpp"

namespace brsieve {
namespace {

constexpr size_t kCandidateLimit = 1'000'000;

unsigned valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) return ~0u;
  return split_valuation(n, p).first;
}

struct HenselOutcome {
  Solubility result = Solubility::kInsoluble;
  std::string witness;
  unsigned depth = 0;
};

// Roots of G in Z_p (restricted to pZ_p when `only_multiples_of_p`).
HenselOutcome hensel_search(const ZPoly& G, const BigInt& p, unsigned depth_bound, bool only_multiples_of_p) {
  HenselOutcome out;
  const ZPoly dG = G.derivative();
  const std::uint64_t pu = to_u64(p);
  std::vector<BigInt> level;
  for (std::uint64_t r = 0; r < pu; ++r) {
    if (only_multiples_of_p && r != 0) break;
    if (divisible(G.eval(BigInt(big(r))), p)) level.push_back(big(r));
  }
  BigInt pk = p;
  for (unsigned k = 1; !level.empty(); ++k) {
    out.depth = k;
    for (const auto& r : level) {
      BigInt fr = G.eval(r);
      BigInt dr = dG.eval(r);
      if (fr == 0) {
        out.result = Solubility::kSoluble;
        out.witness = "x = " + r.get_str() + " is an exact root";
        return out;
      }
      unsigned vf = valuation(fr, p);
      unsigned vd = valuation(dr, p);
      if (dr != 0 && vf > 2 * vd) {
        out.result = Solubility::kSoluble;
        out.witness = "x = " + r.get_str() + " mod " + pk.get_str() + ", v(F) = " + std::to_string(vf) +
                      " > 2 v(F') = " + std::to_string(2 * vd);
        return out;
      }
    }
    if (k >= depth_bound) {
      out.result = Solubility::kIndeterminate;
      out.witness = std::to_string(level.size()) + " residue classes survive to depth " + std::to_string(k);
      return out;
    }
    std::vector<BigInt> next;
    BigInt pk1 = pk * p;
    for (const auto& r : level) {
      for (std::uint64_t j = 0; j < pu; ++j) {
        BigInt c = r + big(j) * pk;
        if (divisible(G.eval(c), pk1)) next.push_back(c);
      }
      if (next.size() > kCandidateLimit) {
        out.result = Solubility::kIndeterminate;
        out.witness = "candidate set exceeded the search limit";
        return out;
      }
    }
    level = std::move(next);
    pk = pk1;
  }
  out.result = Solubility::kInsoluble;
  out.witness = "no residue class survives to depth " + std::to_string(out.depth);
  return out;
}

}  // namespace

std::vector<int> ZeroDimScheme::degrees() const {
  std::vector<int> d;
  for (const auto& f : factors) d.push_back(f.degree());
  return d;
}

ZeroDimScheme make_zero_dim_scheme(const std::vector<ZPoly>& declared_factors) {
  if (declared_factors.empty()) fail(ErrorCode::kInvalidArgument, "empty factor list");
  ZeroDimScheme T;
  T.F = ZPoly::constant(1);
  for (const auto& f : declared_factors) {
    if (f.degree() < 1) fail(ErrorCode::kInvalidArgument, "factors must be nonconstant");
    T.F = T.F * f;
  }
  if (T.F.degree() > 1 && discriminant(T.F) == 0) fail(ErrorCode::kInvalidArgument, "F is not squarefree");
  for (const auto& f : declared_factors) {
    ZPoly rest = f;
    for (const auto& r : rational_roots(f)) {
      // denominator * x - numerator
      ZPoly lin(std::vector<BigInt>{BigInt(-r.get_num()), BigInt(r.get_den())});
      T.factors.push_back(lin);
      rest = exact_quotient(rest, lin);
    }
    if (rest.degree() >= 1) T.factors.push_back(rest);
  }
  return T;
}

std::string to_string(Solubility s) {
  switch (s) {
    case Solubility::kSoluble:
      return "soluble";
    case Solubility::kInsoluble:
      return "insoluble";
    case Solubility::kIndeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

LocalEvidence local_solubility(const ZeroDimScheme& T, std::uint64_t p) {
  if (!modular::is_prime(p)) fail(ErrorCode::kInvalidArgument, "place must be prime, got " + std::to_string(p));
  LocalEvidence ev;
  ev.place = std::to_string(p);
  const BigInt P = big(p);
  ZPoly F = T.F.primitive_part();
  for (const auto& r : rational_roots(F)) {
    ev.result = Solubility::kSoluble;
    ev.witness = "rational root x = " + r.get_str();
    return ev;
  }
  BigInt disc = discriminant(F);
  ev.depth_bound = 2 * valuation(disc, P) + 1;
  HenselOutcome integral = hensel_search(F, P, ev.depth_bound, false);
  ev.depth = integral.depth;
  if (integral.result == Solubility::kSoluble) {
    ev.result = Solubility::kSoluble;
    ev.witness = integral.witness;
    return ev;
  }
  // x = 1/y with y in pZ_p
  ZPoly G = F.reversed().primitive_part();
  unsigned bound_g = G.degree() >= 2 ? 2 * valuation(discriminant(G), P) + 1 : 1;
  HenselOutcome polar = hensel_search(G, P, bound_g, true);
  ev.depth = std::max(ev.depth, polar.depth);
  ev.depth_bound = std::max(ev.depth_bound, bound_g);
  if (polar.result == Solubility::kSoluble) {
    ev.result = Solubility::kSoluble;
    ev.witness = "1/x: " + polar.witness;
    return ev;
  }
  if (integral.result == Solubility::kIndeterminate || polar.result == Solubility::kIndeterminate) {
    ev.result = Solubility::kIndeterminate;
    ev.witness = integral.result == Solubility::kIndeterminate ? integral.witness : polar.witness;
    return ev;
  }
  ev.result = Solubility::kInsoluble;
  ev.witness = "no root of F in Z_p and none of valuation < 0";
  return ev;
}

LocalEvidence local_solubility_real(const ZeroDimScheme& T) {
  LocalEvidence ev;
  ev.place = "real";
  unsigned n = count_real_roots(T.F);
  ev.result = n > 0 ? Solubility::kSoluble : Solubility::kInsoluble;
  ev.witness = std::to_string(n) + " real roots (Sturm count)";
  return ev;
}

}  // namespace brsieve
