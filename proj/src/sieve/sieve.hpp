#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "common/claim.hpp"
#include "curves/lpoly.hpp"
#include "sieve/local.hpp"

namespace brsieve {

// Hypotheses about J(Q) and Sha that are taken as input, never computed.
struct MordellWeilInput {
  unsigned rank = 0;
  BigInt torsion_order = 1;
  std::string provenance;  // e.g. "external 2-descent"
  bool rank_assumed = false;
  bool sha_finite_assumed = false;

  void validate() const;
  bool trivial() const { return rank == 0 && torsion_order == 1; }
};

struct ScanRange {
  std::uint64_t lo = 2;
  std::uint64_t hi = 2;
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultCountBudget;
};

struct HypexPlace {
  std::uint64_t v = 0;
  bool good = false;
  std::string note;  // bad-reduction reason or budget message
  bool has_linear_factor = false;
  bool hit = false;
  bool budget_exceeded = false;
  std::optional<LPolynomial> L;
  BigInt order;  // #J(F_v) when computed
  std::vector<BigInt> radical_primes;
};

struct SieveReport {
  std::vector<HypexPlace> places;
  std::vector<BigInt> d_values;
  std::vector<BigInt> radical_primes;  // union over hits, sorted
  BigInt torsion_bound;                // gcd of #J(F_v) over odd good places with a computed order
  std::vector<Claim> claims;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
  bool budget_exceeded = false;
};

SieveReport hypex_scan(const HyperellipticModel& C, const MordellWeilInput& mw, const ScanRange& range);

struct CoverResult {
  std::uint64_t v0 = 0;
  BigInt order;  // #E(F_{v0})
  bool fiber_has_root = false;
  std::optional<BigInt> d;
  std::vector<Claim> claims;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
};

CoverResult cover_check(const EllipticModel& E, const MordellWeilInput& mw, const ZPoly& fiber_poly, std::uint64_t v0);

struct HasseCertificate {
  bool pass = false;
  BigInt b;
  std::vector<BigRat> rational_roots;
  std::vector<LocalEvidence> special_places;  // 2, 3, primes dividing b, real
  // Per-prime witnesses for p not dividing 6b: "p = 1 mod 3: sqrt(-3) = r" or
  // "p = 2 mod 3: cube root of b = r".
  std::vector<std::pair<std::uint64_t, std::string>> generic_witnesses;
  std::string failure;
};

// Shape (x^2 + 3)(x^3 - b). Throws kInvalidArgument when F has another shape.
HasseCertificate hasse_counterexample_certify(const ZeroDimScheme& T, const BigInt& b);
// Recovers b from F when it has the required shape.
std::optional<BigInt> match_hasse_shape(const ZPoly& F);

struct IrreducibilityEvidence {
  ZPoly factor;
  bool certified = false;
  std::string method;
};

struct PacketReport {
  bool squarefree = false;
  bool coprime = false;
  std::vector<int> degrees;
  int degree_gcd = 0;
  std::vector<IrreducibilityEvidence> irreducibility;
  bool locally_soluble_certified = false;
  std::string local_method;
  std::optional<HasseCertificate> hasse;
  std::vector<LocalEvidence> scanned;  // bounded-scan evidence when no certificate applies
  bool pass = false;
  std::string failure;
  std::vector<Claim> claims;
};

// y^2 = F*G with the Weierstrass points over V(F) as the packet part.
PacketReport torsion_packet_certify(const std::vector<ZPoly>& F_factors, const ZPoly& G, std::uint64_t scan_bound = 1000);

struct ProjectedPlace {
  std::uint64_t v = 0;
  bool good = false;
  std::string note;
  std::vector<FieldElem> weierstrass_roots;  // roots of F*G in F_v
  BigInt order;                              // #J(F_v)
  unsigned two_torsion_checked = 0;          // classes [w' - w] verified 2-torsion and killed by pr_{2-perp}
  bool projection_trivial = false;
};

struct ProjectedReport {
  std::vector<ProjectedPlace> places;
  std::vector<Claim> claims;
  std::vector<std::string> notes;
};

ProjectedReport ps_projected_demo(const ZPoly& F, const ZPoly& G, const ScanRange& range);

}  // namespace brsieve
