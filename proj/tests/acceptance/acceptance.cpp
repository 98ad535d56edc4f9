// Acceptance run: one line per criterion, exact tolerances and wall-clock
// limits fixed below. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "app/commands.hpp"
#include "constant/constant_curve.hpp"
#include "curves/curve_models.hpp"
#include "curves/lpoly.hpp"
#include "ff/factor.hpp"
#include "ff/modular.hpp"
#include "ff/poly_parse.hpp"
#include "heuristic/heuristic.hpp"
#include "io/curve_spec.hpp"
#include "jacobian/group.hpp"
#include "jacobian/mumford.hpp"
#include "jacobian/structure.hpp"
#include "oracle.hpp"
#include "search/place_search.hpp"
#include "sieve/local.hpp"
#include "sieve/sieve.hpp"

using namespace brsieve;
using oracle::i64;

namespace {

const std::string kCurves = std::string(BRSIEVE_SOURCE_ROOT) + "/curves/";

// Collects failed expectations with a short description.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string str(const BigInt& v) { return v.get_str(); }

template <class T>
std::string list(const std::vector<T>& xs) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

FqHyperelliptic over(const std::vector<i64>& f, const FieldPtr& F) {
  std::vector<FieldElem> c;
  for (auto x : f) c.push_back(F->from_int(x));
  return FqHyperelliptic(FqPoly(F, c));
}

std::vector<i64> coeffs(const LPolynomial& L) {
  std::vector<i64> out;
  for (const auto& c : L.coeffs) out.push_back(c.get_si());
  return out;
}

// ---------------------------------------------------------------------------

void index2_orders(Check& c) {
  Report r = run_command("curve jac-order", {{"curve", kCurves + "index2.curve"}, {"places", "3,5,17"}});
  const Json j = report_json(r);
  const Json& orders = j["result"]["orders"];
  const std::vector<std::pair<std::string, long>> want = {{"3", 9}, {"5", 25}, {"17", 343}};
  for (const auto& [v, n] : want) {
    const std::string got = orders.contains(v) ? orders[v].dump() : "missing";
    c.expect(got == std::to_string(n), "#J(F_" + v + ") = " + got + ", want " + std::to_string(n));
  }
}

void index2_hypex(Check& c) {
  MordellWeilInput mw;
  mw.rank_assumed = mw.sha_finite_assumed = true;
  SieveReport r = hypex_scan(load_curve_spec(kCurves + "index2.curve").hyperelliptic_q(), mw,
                             {2, 20, 1, kDefaultCountBudget});
  std::vector<std::uint64_t> hits;
  std::vector<std::string> radicals;
  for (const auto& pl : r.places) {
    if (!pl.hit) continue;
    hits.push_back(pl.v);
    radicals.push_back(list(pl.radical_primes));
  }
  c.expect(hits == std::vector<std::uint64_t>{3, 5, 17}, "hits " + list(hits) + ", want {3,5,17}");
  c.expect(radicals == std::vector<std::string>{"{3}", "{5}", "{7}"},
           "radical primes " + list(radicals) + ", want {{3},{5},{7}}");
}

void small_elliptic(Check& c) {
  const std::uint64_t n = count_points(load_curve_spec(kCurves + "ef3.curve").elliptic_fq());
  c.expect(n == 1, "#E(F_3) = " + std::to_string(n));
  const auto ess = cubic_to_weierstrass(load_curve_spec(kCurves + "ess.curve").hyperelliptic_fq().f());
  const auto eord = cubic_to_weierstrass(load_curve_spec(kCurves + "eord.curve").hyperelliptic_fq().f());
  c.expect(!is_ordinary(ess), "y^2 = -x^3 + x - 1 reported ordinary");
  c.expect(is_ordinary(eord), "y^2 = -x^3 + x^2 - 1 reported supersingular");
}

const std::vector<i64> kC0 = {-1, 0, 1, 0, 0, 0, -1};
const std::vector<i64> kEss = {-1, 1, 0, -1};
const std::vector<i64> kEord = {-1, 0, 1, -1};

void c0_lpoly(Check& c) {
  FqHyperelliptic C0 = load_curve_spec(kCurves + "c0.curve").hyperelliptic_fq();
  c.expect(count_points(C0) == 0, "N_1 = " + std::to_string(count_points(C0)));
  const std::vector<i64> counts = {oracle::count_hyperelliptic(kC0, 3, 1), oracle::count_hyperelliptic(kC0, 3, 2)};
  const std::vector<i64> want = oracle::lpoly_from_counts(3, 2, counts);
  // (1 - T + 3T^2)(1 - 3T + 3T^2)
  c.expect(want == std::vector<i64>{1, -4, 9, -12, 9}, "oracle L = " + list(want));
  const std::vector<i64> got = coeffs(lpolynomial(C0));
  c.expect(got == want, "L = " + list(got) + ", oracle " + list(want));
}

void c0_threshold(Check& c) {
  ThresholdScan ts = threshold_scan(load_curve_spec(kCurves + "c0.curve").hyperelliptic_fq(), BigInt(2), 3);
  std::vector<unsigned> r;
  std::vector<std::string> orders;
  for (const auto& row : ts.rows) {
    r.push_back(row.r);
    orders.push_back(str(row.order));
  }
  c.expect(r == std::vector<unsigned>{0, 0, 4}, "r = " + list(r));
  c.expect(orders == std::vector<std::string>{"3", "105", "1008"}, "orders " + list(orders));
  for (unsigned n = 1; n <= 3 && n <= ts.rows.size(); ++n) {
    const i64 split = oracle::count_hyperelliptic(kEss, 3, n) * oracle::count_hyperelliptic(kEord, 3, n);
    c.expect(ts.rows[n - 1].order == BigInt(static_cast<long>(split)),
             "n = " + std::to_string(n) + ": quotient product " + std::to_string(split));
  }
}

void dm_empty(Check& c) {
  for (unsigned m = 1; m <= 3; ++m) {
    DmReport d = dm_affine_check(m, 3);
    const std::string tag = "m = " + std::to_string(m) + ": ";
    c.expect(d.brute_force.has_value() && *d.brute_force == 0, tag + "enumeration not 0");
    c.expect(d.algebraic == 0 && !d.certificate.empty(), tag + "no algebraic certificate");
    c.expect(d.agree, tag + "methods disagree");
  }
}

void hasse(Check& c) {
  ZeroDimScheme T = make_zero_dim_scheme(parse_poly_factors("(x^2+3)*(x^3-19)"));
  HasseCertificate h = hasse_counterexample_certify(T, BigInt(19));
  c.expect(h.pass, "certificate failed: " + h.failure);
  c.expect(h.rational_roots.empty(), "rational root found");
  std::vector<std::string> places;
  for (const auto& e : h.special_places) {
    places.push_back(e.place);
    c.expect(e.result == Solubility::kSoluble, "place " + e.place + " not certified");
  }
  for (const char* p : {"2", "3", "19", "real"}) {
    c.expect(std::find(places.begin(), places.end(), p) != places.end(), std::string("no explicit check at ") + p);
  }
  for (std::uint64_t p : modular::primes_between(2, 10'000)) {
    if (local_solubility(T, p).result != Solubility::kSoluble) c.expect(false, "scan: not soluble at " + std::to_string(p));
  }
  c.expect(local_solubility_real(T).result == Solubility::kSoluble, "scan: not soluble at the real place");
}

void packet(Check& c) {
  PacketReport r = torsion_packet_certify(parse_poly_factors("(x^2+3)*(x^3-19)"), parse_int_poly("2*(x^3+x+1)"));
  c.expect(r.pass, "certificate failed: " + r.failure);
  c.expect(r.claims.size() == 1, std::to_string(r.claims.size()) + " claims");
  if (!r.claims.empty()) {
    c.expect(r.claims[0].statement.find("2-perp]} is nonempty") != std::string::npos,
             "claim: " + r.claims[0].statement);
    c.expect(!r.claims[0].criterion.empty(), "claim has no criterion");
  }
}

void chain(Check& c) {
  const EllipticModel E = load_curve_spec(kCurves + "e67a1.curve").elliptic_q();
  ChainState st = coprime_chain(E, 17, 10'000, 5);
  c.expect(st.chain.size() >= 5, "chain length " + std::to_string(st.chain.size()));
  const std::string err = verify_chain(E, st);
  c.expect(err.empty(), "re-verification: " + err);
}

template <class G>
bool group_axioms(const G& group, unsigned triples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto O = group.identity();
  for (unsigned i = 0; i < triples; ++i) {
    auto a = group.random_element(rng), b = group.random_element(rng), d = group.random_element(rng);
    if (group.add(group.add(a, b), d) != group.add(a, group.add(b, d))) return false;
    if (group.add(a, b) != group.add(b, a) || group.add(a, O) != a || group.add(a, group.neg(a)) != O) return false;
  }
  return true;
}

void properties(Check& c) {
  const std::vector<i64> quintic = {1, 1, 0, 0, 0, 1};
  for (std::uint64_t p : {7ull, 11ull}) {
    const std::string tag = "Cantor axioms over F_" + std::to_string(p) + ": ";
    try {
      MumfordGroup J(over(quintic, FiniteField::prime(p)));
      c.expect(group_axioms(J, 1000, p), tag + "violated");
      const BigInt N = lpolynomial(J.curve()).at_one();
      std::mt19937_64 rng(p);
      for (int i = 0; i < 200; ++i) {
        if (scalar_mul(J, N, J.random_element(rng)) != J.identity()) {
          c.expect(false, "Lagrange fails over F_" + std::to_string(p));
          break;
        }
      }
    } catch (const Error& e) {
      c.expect(false, tag + e.what());
    }
  }

  for (std::uint64_t n : {12ull, 343ull, 1008ull}) {
    CyclicGroup G(n);
    for (long d : {2L, 3L, 7L}) {
      AmbientGroupInfo info = make_ambient_info(BigInt(static_cast<unsigned long>(n)), BigInt(d));
      bool ok = true;
      for (std::uint64_t x = 0; x < n && ok; ++x) {
        auto [a, b] = split_projection(G, x, info);
        ok = G.add(a, b) == x && scalar_mul(G, info.N_d, a) == 0 && scalar_mul(G, info.N_perp, b) == 0 &&
             split_projection(G, a, info) == std::pair<std::uint64_t, std::uint64_t>{a, 0} &&
             split_projection(G, b, info) == std::pair<std::uint64_t, std::uint64_t>{0, b};
      }
      c.expect(ok, "split_projection on Z/" + std::to_string(n) + " with d = " + std::to_string(d));
    }
  }
  for (std::uint64_t p : {11ull, 13ull}) {
    MumfordGroup J(over(quintic, FiniteField::prime(p)));
    AmbientGroupInfo info = make_ambient_info(lpolynomial(J.curve()).at_one(), BigInt(2));
    std::mt19937_64 rng(100 + p);
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
      auto D = J.random_element(rng);
      auto [a, b] = split_projection(J, D, info);
      ok = J.add(a, b) == D && scalar_mul(J, info.N_d, a) == J.identity() &&
           scalar_mul(J, info.N_perp, b) == J.identity() && split_projection(J, a, info).first == a &&
           split_projection(J, b, info).first == J.identity();
    }
    c.expect(ok, "split_projection on J over F_" + std::to_string(p));
  }

  // functional equation on every curve file, at the good places below 60 for curves over Q
  unsigned checked = 0;
  auto fe = [&](const LPolynomial& L, const std::string& where) {
    try {
      L.validate();
      ++checked;
    } catch (const Error& e) {
      c.expect(false, "functional equation at " + where + ": " + e.what());
    }
  };
  for (const auto& entry : std::filesystem::directory_iterator(kCurves)) {
    CurveSpec s = load_curve_spec(entry.path().string());
    const std::string name = entry.path().filename().string();
    if (!s.over_q()) {
      if (s.elliptic()) fe(lpolynomial(s.elliptic_fq()), name);
      else fe(lpolynomial(s.hyperelliptic_fq()), name);
      continue;
    }
    for (std::uint64_t v : modular::primes_between(3, 60)) {
      const std::string where = name + " v = " + std::to_string(v);
      if (s.elliptic()) {
        auto red = good_reduction(s.elliptic_q(), v);
        if (red.good) fe(lpolynomial(*red.curve), where);
      } else {
        auto red = good_reduction(s.hyperelliptic_q(), v);
        if (red.good) fe(lpolynomial(*red.curve), where);
      }
    }
  }
  c.expect(checked > 40, "only " + std::to_string(checked) + " L-polynomials checked");

  HeuristicConfig h;
  h.bound = 40;
  h.trials = 4000;
  h.seed = 3;
  EmptyingCurve ec = emptying_probability(load_curve_spec(kCurves + "index2.curve").hyperelliptic_q(), h);
  c.expect(!ec.rows.empty(), "no emptying rows");
  for (const auto& r : ec.rows) {
    c.expect(r.within_3sigma, "sampled emptying outside 3 sigma at |S| = " + std::to_string(r.size));
  }
}

void contrast(Check& c) {
  HeuristicConfig h;
  h.bound = 200;
  h.trials = 4000;
  h.seed = 7;
  ContrastReport r = forced_torsion_contrast(parse_poly_factors("(x^2+3)*(x^3-19)"), parse_int_poly("2*(x^3+x+1)"), h);
  c.expect(!r.rows.empty(), "no rows");
  if (r.rows.empty()) return;
  const BigRat last = r.rows.back().random_model;
  c.expect(last >= BigRat(99, 100), "random model at |S| = " + std::to_string(r.rows.back().size) + " is " +
                                        std::to_string(last.get_d()));
  for (const auto& row : r.rows) {
    c.expect(row.actual_model == 0, "actual model nonzero at v = " + std::to_string(row.v));
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "index-2 curve: #J(F_v) = 9, 25, 343 at v = 3, 5, 17", 1, index2_orders},
      {2, "index-2 curve: no-linear-factor hits {3,5,17}, radicals {3},{5},{7}", 1, index2_hypex},
      {3, "#E(F_3) = 1; supersingular and ordinary quotients", 1, small_elliptic},
      {4, "C0: N_1 = 0, L = (1-T+3T^2)(1-3T+3T^2)", 5, c0_lpoly},
      {5, "C0 threshold with ell = 2: r = (0,0,4), #J = (3,105,1008)", 1, c0_threshold},
      {6, "D_m has no affine points, m = 1..3, both methods", 5, dm_empty},
      {7, "Hasse certificate for (x^2+3)(x^3-19); scan p <= 10^4", 30, hasse},
      {8, "torsion packet certificate and claim", 30, packet},
      {9, "coprime chain on 67.a1, v <= 10^4, length >= 5", 60, chain},
      {10, "property suites", 120, properties},
      {11, "forced-torsion contrast at B = 200", 60, contrast},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= cr.limit_seconds) {
      c.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_seconds) + " s");
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("criterion %2d: %s  %-70s %7.2f s / %.0f s\n", cr.id, ok ? "PASS" : "FAIL", cr.name, secs,
                cr.limit_seconds);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
