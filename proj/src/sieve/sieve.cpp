#include "sieve/sieve.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "common/parallel.hpp"
#include "ff/factor.hpp"
#include "ff/modular.hpp"
#include "jacobian/group.hpp"
#include "jacobian/mumford.hpp"
#include "jacobian/transform.hpp"

namespace brsieve {
namespace {

constexpr std::uint64_t kHasseWitnessBound = 100;

std::string mw_assumption(const MordellWeilInput& mw, const std::string& group, bool torsion_certified) {
  std::string s = group + " = {O}: rank 0";
  if (!mw.provenance.empty()) s += " (" + mw.provenance + ")";
  if (!torsion_certified) s += ", trivial torsion declared";
  return s;
}

std::string join_bigints(const std::vector<BigInt>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].get_str();
  return s;
}

bool certify_irreducible_mod_p(const ZPoly& f, std::string* method) {
  const BigInt lc_disc = f.lead() * discriminant(f);
  for (std::uint64_t p : modular::primes_between(3, 2000)) {
    if (divisible(lc_disc, big(p))) continue;
    if (is_irreducible(f.reduce(FiniteField::prime(p)))) {
      *method = "irreducible mod " + std::to_string(p);
      return true;
    }
  }
  return false;
}

}  // namespace

void MordellWeilInput::validate() const {
  if (torsion_order < 1) fail(ErrorCode::kInvalidArgument, "torsion order must be >= 1");
}

SieveReport hypex_scan(const HyperellipticModel& C, const MordellWeilInput& mw, const ScanRange& range) {
  mw.validate();
  if (!mw.trivial()) fail(ErrorCode::kUnsupported, "hypex scan needs a trivial Mordell-Weil group");
  C.validate();
  const auto primes = modular::primes_between(range.lo, range.hi);
  SieveReport report;
  report.places = parallel_map<HypexPlace>(primes.size(), range.jobs, [&](size_t i) {
    HypexPlace rec;
    rec.v = primes[i];
    auto red = good_reduction(C, rec.v);
    rec.good = red.good;
    if (!red.good) {
      rec.note = red.reason;
      return rec;
    }
    rec.has_linear_factor = has_linear_factor(red.curve->f());
    try {
      rec.L = lpolynomial(*red.curve, range.budget);
      rec.order = jacobian_order(*rec.L, 1);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      rec.budget_exceeded = true;
      rec.note = e.what();
      return rec;
    }
    if (!rec.has_linear_factor) {
      rec.hit = true;
      rec.radical_primes = factor_integer(rec.order).primes();
    }
    return rec;
  });

  std::set<BigInt> radical;
  report.torsion_bound = 0;
  for (const auto& rec : report.places) {
    report.budget_exceeded |= rec.budget_exceeded;
    if (rec.good && !rec.budget_exceeded) report.torsion_bound = gcd(report.torsion_bound, rec.order);
    if (!rec.hit) continue;
    report.d_values.push_back(rec.order);
    radical.insert(rec.radical_primes.begin(), rec.radical_primes.end());
  }
  report.radical_primes.assign(radical.begin(), radical.end());

  const bool torsion_certified = report.torsion_bound == 1;
  if (torsion_certified) {
    report.notes.push_back("J(Q) has trivial torsion: gcd of #J(F_v) over the odd good places scanned is 1");
  }
  report.assumptions.push_back(mw_assumption(mw, "J(Q)", torsion_certified));
  report.assumptions.push_back("Sha(Q, J) finite");
  if (!mw.rank_assumed || !mw.sha_finite_assumed) {
    report.notes.push_back("claims withheld: the rank-0 and Sha-finiteness hypotheses were not both declared");
    return report;
  }
  for (const auto& rec : report.places) {
    if (!rec.hit) continue;
    Claim c;
    c.statement = "C(A_Q)^{Br C[d^inf]} is empty for d = " + rec.order.get_str() + " (v = " + std::to_string(rec.v) +
                  ", radical primes " + join_bigints(rec.radical_primes) + ")";
    c.criterion = "no-linear-factor criterion: f has no root mod v and J(Q) is trivial";
    c.assumptions = report.assumptions;
    report.claims.push_back(std::move(c));
  }
  return report;
}

CoverResult cover_check(const EllipticModel& E, const MordellWeilInput& mw, const ZPoly& fiber_poly, std::uint64_t v0) {
  mw.validate();
  if (!mw.trivial()) fail(ErrorCode::kUnsupported, "cover check needs E(Q) trivial");
  E.validate();
  auto red = good_reduction(E, v0);
  if (!red.good) fail(ErrorCode::kInvalidArgument, "E has bad reduction at " + std::to_string(v0));
  if (fiber_poly.degree() < 1) fail(ErrorCode::kInvalidArgument, "fiber polynomial must be nonconstant");
  CoverResult out;
  out.v0 = v0;
  out.order = big(count_points(*red.curve));
  FqPoly fiber = fiber_poly.reduce(red.curve->field());
  if (fiber.degree() < fiber_poly.degree()) {
    // the fiber meets infinity mod v0; treat conservatively as having a point
    out.fiber_has_root = true;
    out.notes.push_back("fiber polynomial drops degree mod v0; no obstruction claimed");
  } else {
    out.fiber_has_root = has_linear_factor(fiber);
  }
  out.assumptions = {mw_assumption(mw, "E(Q)", false), "Sha(Q, E) finite",
                     "the fiber polynomial defines the fiber of the cover above O"};
  if (out.fiber_has_root) return out;
  out.d = out.order;
  if (!mw.rank_assumed || !mw.sha_finite_assumed) {
    out.notes.push_back("claims withheld: the rank-0 and Sha-finiteness hypotheses were not both declared");
    return out;
  }
  Claim c;
  c.statement = "C(A_Q)^{Br C[d^inf]} is empty for d = #E(F_" + std::to_string(v0) + ") = " + out.order.get_str();
  c.criterion = "cover-fiber criterion: the fiber above O has no F_v0-point and E(Q) is trivial";
  c.assumptions = out.assumptions;
  out.claims.push_back(std::move(c));
  return out;
}

std::optional<BigInt> match_hasse_shape(const ZPoly& F) {
  // (x^2 + 3)(x^3 - b) = x^5 + 3x^3 - b x^2 - 3b
  if (F.degree() != 5 || F[5] != 1 || F[4] != 0 || F[3] != 3 || F[1] != 0) return std::nullopt;
  if (F[0] != 3 * F[2]) return std::nullopt;
  return BigInt(-F[2]);
}

HasseCertificate hasse_counterexample_certify(const ZeroDimScheme& T, const BigInt& b) {
  auto matched = match_hasse_shape(T.F);
  if (!matched || *matched != b) {
    fail(ErrorCode::kInvalidArgument, "F does not have the shape (x^2 + 3)(x^3 - b) for b = " + b.get_str());
  }
  HasseCertificate cert;
  cert.b = b;
  cert.rational_roots = rational_roots(T.F);
  if (!cert.rational_roots.empty()) {
    cert.failure = "rational root x = " + cert.rational_roots.front().get_str();
    return cert;
  }
  // Generic primes: p = 1 mod 3 gives sqrt(-3), p = 2 mod 3 gives a cube root of b;
  // both roots are simple for their factor since p does not divide 6b.
  for (std::uint64_t p : modular::primes_between(5, kHasseWitnessBound)) {
    if (divisible(b, big(p))) continue;
    const std::uint64_t bp = mod_u64(b, p);
    if (p % 3 == 1) {
      std::uint64_t r = modular::sqrt_mod(p - 3, p);
      cert.generic_witnesses.emplace_back(p, "p = 1 mod 3: " + std::to_string(r) + "^2 = -3 mod " + std::to_string(p));
    } else {
      std::uint64_t r = modular::pow(bp, (2 * p - 1) / 3, p);
      if (modular::pow(r, 3, p) != bp) fail(ErrorCode::kInternal, "cube root witness failed");
      cert.generic_witnesses.emplace_back(p, "p = 2 mod 3: " + std::to_string(r) + "^3 = b mod " + std::to_string(p));
    }
  }
  std::set<std::uint64_t> special{2, 3};
  Factorization fb = factor_integer(abs(b));
  if (!fb.complete()) fail(ErrorCode::kBudgetExceeded, "could not factor b = " + b.get_str());
  for (const auto& [q, e] : fb.factors) special.insert(to_u64(q));
  for (std::uint64_t p : special) cert.special_places.push_back(local_solubility(T, p));
  cert.special_places.push_back(local_solubility_real(T));
  for (const auto& ev : cert.special_places) {
    if (ev.result != Solubility::kSoluble) {
      cert.failure = "place " + ev.place + ": " + to_string(ev.result);
      return cert;
    }
  }
  cert.pass = true;
  return cert;
}

PacketReport torsion_packet_certify(const std::vector<ZPoly>& F_factors, const ZPoly& G, std::uint64_t scan_bound) {
  PacketReport rep;
  ZeroDimScheme T = make_zero_dim_scheme(F_factors);
  if (G.degree() < 0) fail(ErrorCode::kInvalidArgument, "G must be nonzero");
  ZPoly FG = T.F * G;
  if (FG.degree() < 3) fail(ErrorCode::kInvalidArgument, "F*G must have degree >= 3");
  rep.squarefree = discriminant(FG) != 0;
  rep.coprime = rep.squarefree || G.degree() == 0;
  if (!rep.squarefree) {
    rep.failure = "F*G is not squarefree";
    return rep;
  }
  rep.degrees = T.degrees();
  rep.degree_gcd = 0;
  for (int d : rep.degrees) rep.degree_gcd = std::gcd(rep.degree_gcd, d);
  for (const auto& f : T.factors) {
    IrreducibilityEvidence ev{f, false, ""};
    if (f.degree() == 1) {
      ev.certified = true;
      ev.method = "linear";
    } else if (f.degree() <= 3) {
      ev.certified = rational_roots(f).empty();
      ev.method = ev.certified ? "no rational root" : "has a rational root";
    } else {
      ev.certified = certify_irreducible_mod_p(f, &ev.method);
      if (!ev.certified) ev.method = "not certified";
    }
    rep.irreducibility.push_back(std::move(ev));
  }
  if (rep.degree_gcd != 1) {
    bool all_certified = std::all_of(rep.irreducibility.begin(), rep.irreducibility.end(),
                                     [](const auto& e) { return e.certified; });
    rep.failure = "gcd of factor degrees is " + std::to_string(rep.degree_gcd) +
                  (all_certified ? "" : " on the declared factors (irreducibility not fully certified)");
    return rep;
  }
  if (auto b = match_hasse_shape(T.F)) {
    rep.hasse = hasse_counterexample_certify(T, *b);
    rep.local_method = "certificate for (x^2 + 3)(x^3 - b)";
    rep.locally_soluble_certified = rep.hasse->pass;
    if (!rep.hasse->pass) {
      rep.failure = "local solubility certificate failed: " + rep.hasse->failure;
      return rep;
    }
  } else {
    rep.local_method = "bounded scan over p <= " + std::to_string(scan_bound) + " and the real place";
    for (std::uint64_t p : modular::primes_between(2, scan_bound)) rep.scanned.push_back(local_solubility(T, p));
    rep.scanned.push_back(local_solubility_real(T));
    for (const auto& ev : rep.scanned) {
      if (ev.result == Solubility::kInsoluble) {
        rep.failure = "V(F) has no point over the completion at " + ev.place;
        return rep;
      }
    }
    rep.failure = "local solubility verified only on a bounded set of places; no claim";
    return rep;
  }
  rep.pass = true;
  Claim c;
  c.statement = "V(F)(A_Q) lies in C(A_Q)^{Br C[d^inf]} for every odd d, so C(A_Q)^{(Br C)[2-perp]} is nonempty";
  c.criterion = "adelic torsion-packet criterion: Weierstrass points form a 2-torsion packet carrying a degree-1 zero-cycle";
  rep.claims.push_back(std::move(c));
  return rep;
}

ProjectedReport ps_projected_demo(const ZPoly& F, const ZPoly& G, const ScanRange& range) {
  ProjectedReport rep;
  HyperellipticModel C{F * G};
  C.validate();
  const auto primes = range.lo <= range.hi ? modular::primes_between(range.lo, range.hi) : std::vector<std::uint64_t>{};
  rep.places = parallel_map<ProjectedPlace>(primes.size(), range.jobs, [&](size_t i) {
    ProjectedPlace rec;
    rec.v = primes[i];
    auto red = good_reduction(C, rec.v);
    rec.good = red.good;
    if (!red.good) {
      rec.note = red.reason;
      return rec;
    }
    const FqHyperelliptic& Cv = *red.curve;
    rec.weierstrass_roots = roots(Cv.f());
    if (rec.weierstrass_roots.empty() && !Cv.odd_degree()) {
      rec.note = "no F_v-rational Weierstrass point";
      return rec;
    }
    try {
      rec.order = jacobian_order(lpolynomial(Cv, range.budget), 1);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      rec.note = std::string("order not computed: ") + e.what();
      rec.projection_trivial = true;  // structural: Weierstrass classes lie in J[2]
      return rec;
    }
    const AmbientGroupInfo info = make_ambient_info(rec.order, 2);
    // Odd-degree model with one rational Weierstrass point at infinity; the
    // other rational Weierstrass points give the classes (x - t, 0).
    std::optional<OddDegreeModel> model;
    if (!Cv.odd_degree()) model = odd_degree_transform(Cv, rec.weierstrass_roots.front());
    MumfordGroup J(model ? model->target : Cv);
    const auto& K = J.curve().field();
    bool ok = true;
    for (FieldElem w : rec.weierstrass_roots) {
      FieldElem t = w;
      if (model) {
        auto img = model->map_point(w, K->zero());
        if (!img) continue;  // the point sent to infinity
        t = img->first;
      }
      MumfordDivisor D = J.from_point(t, K->zero());
      const bool two_torsion = J.add(D, D) == J.identity() && !(D == J.identity());
      const bool killed = split_projection(J, D, info).second == J.identity();
      ok = ok && two_torsion && killed;
      ++rec.two_torsion_checked;
    }
    rec.projection_trivial = ok;
    return rec;
  });
  if (rep.places.empty()) return rep;
  std::vector<std::string> listed;
  bool all_ok = true;
  for (const auto& rec : rep.places) {
    if (!rec.good || rec.weierstrass_roots.empty()) continue;
    listed.push_back(std::to_string(rec.v));
    all_ok = all_ok && rec.projection_trivial;
  }
  if (listed.empty()) {
    rep.notes.push_back("no scanned place has an F_v-rational Weierstrass point");
    return rep;
  }
  if (!all_ok) {
    rep.notes.push_back("a Weierstrass class failed the 2-torsion check; no claim");
    return rep;
  }
  std::string places;
  for (size_t i = 0; i < listed.size(); ++i) places += (i ? ", " : "") + listed[i];
  Claim c;
  c.statement = "0 lies in pr_{2-perp}(iota(C(F_v))) at v = " + places +
                ", so the prime-to-2 projected sieve cannot empty over these places";
  c.criterion = "Weierstrass classes lie in J[2] and the prime-to-2 projection kills J[2]";
  c.assumptions = {"iota is based at a degree-1 zero-cycle supported on the Weierstrass packet"};
  rep.claims.push_back(std::move(c));
  return rep;
}

}  // namespace brsieve
