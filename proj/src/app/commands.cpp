#include "app/commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>

#include "constant/constant_curve.hpp"
#include "ff/factor.hpp"
#include "ff/modular.hpp"
#include "ff/poly_parse.hpp"
#include "heuristic/heuristic.hpp"
#include "io/curve_spec.hpp"
#include "search/place_search.hpp"
#include "sieve/sieve.hpp"

namespace brsieve {

Report run_reproduce(const Json& config);

namespace {

using u64 = std::uint64_t;

Json big_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Json bigs_json(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(big_json(x));
  return a;
}

Json elems_json(const FiniteField& F, const std::vector<FieldElem>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(F.format(x));
  return a;
}

u64 parse_u64(const std::string& s, const std::string& key) {
  size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (...) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') {
    fail(ErrorCode::kInvalidArgument, "option " + key + ": expected a non-negative integer, got '" + s + "'");
  }
  return v;
}

// "a..b" or a single value
std::pair<u64, u64> parse_range(const std::string& s, const std::string& key) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    u64 v = parse_u64(s, key);
    return {v, v};
  }
  u64 lo = parse_u64(s.substr(0, dots), key), hi = parse_u64(s.substr(dots + 2), key);
  if (lo > hi) fail(ErrorCode::kInvalidArgument, "option " + key + ": empty range " + s);
  return {lo, hi};
}

std::vector<u64> parse_list(const std::string& s, const std::string& key) {
  std::vector<u64> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (!tok.empty()) out.push_back(parse_u64(tok, key));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) fail(ErrorCode::kInvalidArgument, "option " + key + ": empty list");
  return out;
}

// Reads options from the request and records the resolved values in the
// report's manifest config.
class Options {
 public:
  Options(const Json& cfg, Report& rep) : cfg_(cfg), rep_(rep) {
    if (!cfg_.is_object()) fail(ErrorCode::kInvalidArgument, "configuration must be a JSON object");
  }

  bool has(const std::string& k) const { return cfg_.contains(k) && !cfg_[k].is_null(); }

  std::string str(const std::string& k, std::optional<std::string> def = std::nullopt) {
    std::string v;
    if (has(k)) {
      const Json& j = cfg_[k];
      v = j.is_string() ? j.get<std::string>() : j.dump();
    } else if (def) {
      v = *def;
    } else {
      fail(ErrorCode::kInvalidArgument, "missing option --" + flag_name(k));
    }
    rep_.config[k] = v;
    return v;
  }

  u64 num(const std::string& k, std::optional<u64> def = std::nullopt) {
    u64 v;
    if (has(k)) {
      const Json& j = cfg_[k];
      if (j.is_number_unsigned()) {
        v = j.get<u64>();
      } else if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
        v = static_cast<u64>(j.get<std::int64_t>());
      } else if (j.is_string()) {
        v = parse_u64(j.get<std::string>(), "--" + flag_name(k));
      } else {
        fail(ErrorCode::kInvalidArgument, "option --" + flag_name(k) + ": expected a non-negative integer");
      }
    } else if (def) {
      v = *def;
    } else {
      fail(ErrorCode::kInvalidArgument, "missing option --" + flag_name(k));
    }
    rep_.config[k] = v;
    return v;
  }

  double real(const std::string& k, double def) {
    double v = def;
    if (has(k)) {
      const Json& j = cfg_[k];
      if (j.is_number()) {
        v = j.get<double>();
      } else if (j.is_string()) {
        try {
          size_t used = 0;
          v = std::stod(j.get<std::string>(), &used);
          if (used != j.get<std::string>().size()) throw std::invalid_argument("trailing");
        } catch (...) {
          fail(ErrorCode::kInvalidArgument, "option --" + flag_name(k) + ": expected a number");
        }
      } else {
        fail(ErrorCode::kInvalidArgument, "option --" + flag_name(k) + ": expected a number");
      }
    }
    rep_.config[k] = v;
    return v;
  }

  bool flag(const std::string& k) {
    bool v = false;
    if (has(k)) {
      const Json& j = cfg_[k];
      if (j.is_boolean()) {
        v = j.get<bool>();
      } else if (j.is_string() && (j == "true" || j == "false")) {
        v = j == "true";
      } else {
        fail(ErrorCode::kInvalidArgument, "option --" + flag_name(k) + ": expected true or false");
      }
    }
    rep_.config[k] = v;
    return v;
  }

  std::vector<u64> places() {
    if (has("places")) {
      const Json& j = cfg_["places"];
      std::vector<u64> out;
      if (j.is_array()) {
        for (const auto& x : j) out.push_back(x.get<u64>());
      } else {
        out = parse_list(j.is_string() ? j.get<std::string>() : j.dump(), "--places");
      }
      rep_.config["places"] = out;
      return out;
    }
    auto [lo, hi] = parse_range(str("primes"), "--primes");
    return modular::primes_between(lo, hi);
  }

  std::pair<u64, u64> range(const std::string& k, std::optional<std::string> def = std::nullopt) {
    return parse_range(str(k, def), "--" + flag_name(k));
  }

  CurveSpec curve() {
    if (has("curve")) {
      const std::string path = str("curve");
      rep_.inputs.push_back(hash_input("curve", path));
      return load_curve_spec(path);
    }
    if (has("curve_spec")) return parse_curve_spec(str("curve_spec"));
    fail(ErrorCode::kInvalidArgument, "missing option --curve");
  }

  Report& report() { return rep_; }

 private:
  static std::string flag_name(std::string k) {
    for (auto& c : k) {
      if (c == '_') c = '-';
    }
    return k;
  }

  const Json& cfg_;
  Report& rep_;
};

struct Common {
  u64 seed;
  unsigned jobs;
  u64 budget;
};

Common common(Options& o) {
  Common c;
  c.seed = o.num("seed", 0);
  c.jobs = static_cast<unsigned>(std::max<u64>(1, o.num("jobs", 1)));
  c.budget = o.num("budget", kDefaultCountBudget);
  o.report().seed = c.seed;
  return c;
}

MordellWeilInput mw_input(Options& o) {
  MordellWeilInput mw;
  mw.rank = 0;
  mw.rank_assumed = o.flag("assume_rank0");
  mw.sha_finite_assumed = o.flag("assume_sha");
  mw.torsion_order = big(o.num("torsion", 1));
  mw.provenance = o.str("rank_provenance", std::string("declared on the command line"));
  return mw;
}

std::vector<unsigned> extension_degrees(Options& o) {
  auto [lo, hi] = o.range("n", std::string("1"));
  if (lo == 0) fail(ErrorCode::kInvalidArgument, "option --n: extension degree must be positive");
  std::vector<unsigned> out;
  for (u64 n = lo; n <= hi; ++n) out.push_back(static_cast<unsigned>(n));
  return out;
}

// Per-place helper for curves over Q: runs `fn` on the good reduction,
// writing {v, good, note, ...} rows.
template <class Fn>
void over_places(Options& o, const CurveSpec& spec, const std::vector<u64>& places, Fn fn) {
  for (u64 v : places) {
    Json row;
    row["v"] = v;
    if (spec.elliptic()) {
      auto red = good_reduction(spec.elliptic_q(), v);
      row["good"] = red.good && v != 2;
      row["note"] = red.good ? (v == 2 ? "characteristic 2 is not supported" : "") : red.reason;
      if (red.good && v != 2) fn(row, *red.curve);
    } else {
      auto red = good_reduction(spec.hyperelliptic_q(), v);
      row["good"] = red.good;
      row["note"] = red.reason;
      if (red.good) fn(row, *red.curve);
    }
    o.report().rows.push_back(row);
  }
}

std::string curve_kind(const CurveSpec& s) { return s.elliptic() ? "elliptic" : "hyperelliptic"; }

void cmd_curve_count(Options& o) {
  Common c = common(o);
  CurveSpec spec = o.curve();
  auto ns = extension_degrees(o);
  Report& r = o.report();
  r.result["curve"] = curve_kind(spec);
  r.result["base"] = spec.base_string();
  auto count = [&](const auto& curve, unsigned n) { return count_points_ext(curve, n, c.budget); };
  if (spec.over_q()) {
    auto places = o.places();
    for (unsigned n : ns) {
      over_places(o, spec, places, [&](Json& row, const auto& curve) {
        row["n"] = n;
        row["count"] = count(curve, n);
      });
    }
    return;
  }
  for (unsigned n : ns) {
    u64 N = spec.elliptic() ? count(spec.elliptic_fq(), n) : count(spec.hyperelliptic_fq(), n);
    r.rows.push_back({{"n", n}, {"count", N}});
  }
}

Json lpoly_json(const LPolynomial& L) {
  return {{"q", big_json(L.q)}, {"genus", L.genus}, {"coefficients", bigs_json(L.coeffs)}};
}

void cmd_curve_lpoly(Options& o) {
  Common c = common(o);
  CurveSpec spec = o.curve();
  Report& r = o.report();
  r.result["curve"] = curve_kind(spec);
  r.result["base"] = spec.base_string();
  auto lp = [&](const auto& curve) { return lpolynomial(curve, c.budget); };
  if (spec.over_q()) {
    over_places(o, spec, o.places(), [&](Json& row, const auto& curve) {
      LPolynomial L = lp(curve);
      row["L"] = L.format();
      row["jacobian_order"] = big_json(jacobian_order(L, 1));
    });
    return;
  }
  LPolynomial L = spec.elliptic() ? lp(spec.elliptic_fq()) : lp(spec.hyperelliptic_fq());
  r.result["L"] = lpoly_json(L);
  r.rows.push_back({{"q", big_json(L.q)}, {"L", L.format()}, {"jacobian_order", big_json(jacobian_order(L, 1))}});
}

void cmd_curve_jac_order(Options& o) {
  Common c = common(o);
  CurveSpec spec = o.curve();
  auto ns = extension_degrees(o);
  Report& r = o.report();
  r.result["curve"] = curve_kind(spec);
  r.result["base"] = spec.base_string();
  auto lp = [&](const auto& curve) { return lpolynomial(curve, c.budget); };
  if (spec.over_q()) {
    Json orders = Json::object();
    over_places(o, spec, o.places(), [&](Json& row, const auto& curve) {
      LPolynomial L = lp(curve);
      Json per = Json::array();
      for (unsigned n : ns) per.push_back(big_json(jacobian_order(L, n)));
      row["n"] = ns.size() == 1 ? Json(ns[0]) : Json(ns);
      row["order"] = ns.size() == 1 ? per[0] : per;
      orders[std::to_string(row["v"].get<u64>())] = row["order"];
    });
    r.result["orders"] = orders;
    return;
  }
  LPolynomial L = spec.elliptic() ? lp(spec.elliptic_fq()) : lp(spec.hyperelliptic_fq());
  for (unsigned n : ns) r.rows.push_back({{"n", n}, {"order", big_json(jacobian_order(L, n))}});
}

void cmd_curve_reduce(Options& o) {
  common(o);
  CurveSpec spec = o.curve();
  if (!spec.over_q()) fail(ErrorCode::kInvalidArgument, "curve reduce needs a curve over Q");
  o.report().result["curve"] = curve_kind(spec);
  over_places(o, spec, o.places(), [&](Json& row, const auto& curve) {
    using C = std::decay_t<decltype(curve)>;
    if constexpr (std::is_same_v<C, FqHyperelliptic>) {
      row["f"] = elems_json(*curve.field(), curve.f().coeffs());
    } else {
      row["a_invariants"] = elems_json(*curve.field(), std::vector<FieldElem>(curve.a().begin(), curve.a().end()));
    }
  });
}

void cmd_sieve_hypex(Options& o) {
  Common c = common(o);
  CurveSpec spec = o.curve();
  MordellWeilInput mw = mw_input(o);
  auto [lo, hi] = o.range("primes");
  SieveReport s = hypex_scan(spec.hyperelliptic_q(), mw, {lo, hi, c.jobs, c.budget});
  Report& r = o.report();
  Json hits = Json::array(), radicals = Json::array();
  for (const auto& p : s.places) {
    Json row;
    row["v"] = p.v;
    row["good"] = p.good;
    row["note"] = p.note;
    row["has_linear_factor"] = p.has_linear_factor;
    row["hit"] = p.hit;
    row["L"] = p.L ? Json(p.L->format()) : Json();
    row["order"] = p.L ? big_json(p.order) : Json();
    row["radical_primes"] = bigs_json(p.radical_primes);
    r.rows.push_back(row);
    if (p.hit) {
      hits.push_back(p.v);
      radicals.push_back(bigs_json(p.radical_primes));
    }
  }
  r.result["hits"] = hits;
  r.result["radical_primes_per_hit"] = radicals;
  r.result["d_values"] = bigs_json(s.d_values);
  r.result["radical_primes"] = bigs_json(s.radical_primes);
  r.result["torsion_bound"] = big_json(s.torsion_bound);
  r.result["budget_exceeded"] = s.budget_exceeded;
  r.assumptions = s.assumptions;
  r.claims = s.claims;
  r.notes = s.notes;
  if (s.budget_exceeded) r.exit_code = 3;
}

void cmd_sieve_cover(Options& o) {
  common(o);
  CurveSpec spec = o.curve();
  MordellWeilInput mw = mw_input(o);
  ZPoly fiber = parse_int_poly(o.str("fiber"));
  CoverResult cr = cover_check(spec.elliptic_q(), mw, fiber, o.num("place"));
  Report& r = o.report();
  r.result["v0"] = cr.v0;
  r.result["order"] = big_json(cr.order);
  r.result["fiber_has_root"] = cr.fiber_has_root;
  r.result["d"] = cr.d ? big_json(*cr.d) : Json();
  r.rows.push_back({{"v0", cr.v0}, {"order", big_json(cr.order)}, {"fiber_has_root", cr.fiber_has_root}});
  r.assumptions = cr.assumptions;
  r.claims = cr.claims;
  r.notes = cr.notes;
}

Json evidence_json(const LocalEvidence& e) {
  return {{"place", e.place},
          {"result", to_string(e.result)},
          {"witness", e.witness},
          {"depth", e.depth},
          {"depth_bound", e.depth_bound}};
}

void cmd_sieve_local(Options& o) {
  common(o);
  const ZeroDimScheme T = make_zero_dim_scheme(parse_poly_factors(o.str("poly")));
  std::string where = o.str("place");
  std::vector<LocalEvidence> ev;
  auto all_prefix = [&](const std::string& s) -> std::optional<std::string> {
    for (const char* pre : {"all<=", "all\xE2\x89\xA4", "all:"}) {
      if (s.rfind(pre, 0) == 0) return s.substr(std::string(pre).size());
    }
    return std::nullopt;
  };
  if (where == "real") {
    ev.push_back(local_solubility_real(T));
  } else if (auto bound = all_prefix(where)) {
    for (u64 p : modular::primes_between(2, parse_u64(*bound, "--place"))) ev.push_back(local_solubility(T, p));
    ev.push_back(local_solubility_real(T));
  } else {
    u64 p = parse_u64(where, "--place");
    if (!modular::is_prime(p)) fail(ErrorCode::kInvalidArgument, "--place: " + where + " is not prime");
    ev.push_back(local_solubility(T, p));
  }
  Report& r = o.report();
  Json insoluble = Json::array(), indeterminate = Json::array();
  for (const auto& e : ev) {
    r.rows.push_back(evidence_json(e));
    if (e.result == Solubility::kInsoluble) insoluble.push_back(e.place);
    if (e.result == Solubility::kIndeterminate) indeterminate.push_back(e.place);
  }
  r.result["polynomial"] = T.F.format();
  r.result["places_checked"] = ev.size();
  r.result["insoluble"] = insoluble;
  r.result["indeterminate"] = indeterminate;
  r.result["soluble_at_all_checked"] = insoluble.empty() && indeterminate.empty();
}

Json hasse_json(const HasseCertificate& h) {
  Json special = Json::array();
  for (const auto& e : h.special_places) special.push_back(evidence_json(e));
  Json generic = Json::array();
  for (const auto& [p, w] : h.generic_witnesses) generic.push_back({{"p", p}, {"witness", w}});
  Json roots = Json::array();
  for (const auto& q : h.rational_roots) roots.push_back(q.get_str());
  return {{"pass", h.pass},       {"b", big_json(h.b)},         {"rational_roots", roots},
          {"special_places", special}, {"generic_witnesses", generic}, {"failure", h.failure}};
}

void cmd_sieve_packet(Options& o) {
  common(o);
  auto F = parse_poly_factors(o.str("F"));
  ZPoly G = parse_int_poly(o.str("G"));
  PacketReport pr = torsion_packet_certify(F, G, o.num("scan_bound", 1000));
  Report& r = o.report();
  r.result["pass"] = pr.pass;
  r.result["failure"] = pr.failure;
  r.result["squarefree"] = pr.squarefree;
  r.result["coprime"] = pr.coprime;
  r.result["degrees"] = pr.degrees;
  r.result["degree_gcd"] = pr.degree_gcd;
  r.result["locally_soluble_certified"] = pr.locally_soluble_certified;
  r.result["local_method"] = pr.local_method;
  Json irr = Json::array();
  for (const auto& e : pr.irreducibility) {
    irr.push_back({{"factor", e.factor.format()}, {"certified", e.certified}, {"method", e.method}});
  }
  r.result["irreducibility"] = irr;
  r.result["hasse"] = pr.hasse ? hasse_json(*pr.hasse) : Json();
  if (pr.hasse) {
    for (const auto& e : pr.hasse->special_places) r.rows.push_back(evidence_json(e));
  }
  for (const auto& e : pr.scanned) r.rows.push_back(evidence_json(e));
  r.claims = pr.claims;
  for (const auto& c : pr.claims) {
    for (const auto& a : c.assumptions) {
      if (std::find(r.assumptions.begin(), r.assumptions.end(), a) == r.assumptions.end()) r.assumptions.push_back(a);
    }
  }
}

void cmd_sieve_projected(Options& o) {
  Common c = common(o);
  ZPoly F = parse_int_poly(o.str("F"));
  ZPoly G = parse_int_poly(o.str("G"));
  auto [lo, hi] = o.range("primes");
  ProjectedReport pr = ps_projected_demo(F, G, {lo, hi, c.jobs, c.budget});
  Report& r = o.report();
  bool all = true;
  for (const auto& p : pr.places) {
    Json row;
    row["v"] = p.v;
    row["good"] = p.good;
    row["note"] = p.note;
    row["weierstrass_roots"] = p.good ? elems_json(*FiniteField::prime(p.v), p.weierstrass_roots) : Json::array();
    row["order"] = p.order == 0 ? Json() : big_json(p.order);
    row["two_torsion_checked"] = p.two_torsion_checked;
    row["projection_trivial"] = p.projection_trivial;
    r.rows.push_back(row);
    if (p.good && !p.weierstrass_roots.empty()) all = all && p.projection_trivial;
  }
  r.result["projection_trivial_at_all_checked"] = all;
  r.claims = pr.claims;
  r.notes = pr.notes;
}

void cmd_search_chain(Options& o) {
  Common c = common(o);
  EllipticModel E = o.curve().elliptic_q();
  ChainState st = coprime_chain(E, o.num("aux_prime"), o.num("bound"), static_cast<unsigned>(o.num("target", 5)), c.jobs);
  const std::string verdict = verify_chain(E, st);
  Report& r = o.report();
  for (const auto& l : st.chain) r.rows.push_back({{"v", l.v}, {"order", big_json(l.order)}});
  r.result["aux_prime"] = big_json(st.aux_prime);
  r.result["length"] = st.chain.size();
  r.result["radical"] = big_json(st.radical);
  r.result["scanned_up_to"] = st.scanned_up_to;
  r.result["target_reached"] = st.target_reached;
  r.result["verified"] = verdict.empty();
  if (!verdict.empty()) {
    r.notes.push_back("re-verification failed: " + verdict);
    r.status = "mismatch";
    r.exit_code = 1;
  }
}

void cmd_search_torsion_bound(Options& o) {
  common(o);
  EllipticModel E = o.curve().elliptic_q();
  auto places = o.places();
  BigInt b = torsion_bound(E, places);
  Report& r = o.report();
  for (u64 v : places) {
    auto red = good_reduction(E, v);
    r.rows.push_back({{"v", v}, {"count", red.good ? Json(count_points(*red.curve)) : Json()}});
  }
  r.result["torsion_bound"] = big_json(b);
}

HeuristicConfig heuristic_config(Options& o, const Common& c) {
  HeuristicConfig h;
  h.seed = c.seed;
  h.jobs = c.jobs;
  h.budget = c.budget;
  h.bound = o.num("bound");
  h.trials = static_cast<unsigned>(o.num("trials", 10'000));
  return h;
}

void emptying_rows_json(Report& r, const EmptyingCurve& ec) {
  for (const auto& row : ec.rows) {
    r.rows.push_back({{"size", row.size},
                      {"v", row.v},
                      {"analytic", row.analytic.get_d()},
                      {"analytic_exact", row.analytic.get_str()},
                      {"sampled", row.sampled},
                      {"half_width", row.half_width},
                      {"within_3sigma", row.within_3sigma}});
  }
  Json places = Json::array();
  for (const auto& p : ec.places) {
    places.push_back({{"v", p.v},
                      {"curve_points", p.curve_points},
                      {"jacobian_order", big_json(p.jac_order)},
                      {"M", big_json(p.M)},
                      {"flagged", p.flagged},
                      {"note", p.note}});
  }
  r.result["places"] = places;
  r.result["final_analytic"] = ec.rows.empty() ? 0.0 : ec.rows.back().analytic.get_d();
  bool ok = true;
  for (const auto& row : ec.rows) ok = ok && row.within_3sigma;
  r.result["all_within_3sigma"] = ok;
}

void cmd_heuristic_emptying(Options& o) {
  Common c = common(o);
  HyperellipticModel C = o.curve().hyperelliptic_q();
  HeuristicConfig h = heuristic_config(o, c);
  h.d = big(o.num("d", 1));
  EmptyingCurve ec = emptying_probability(C, h, big(o.num("mw_order", 1)));
  Report& r = o.report();
  r.result["d"] = big_json(ec.d);
  r.result["trials"] = ec.trials;
  emptying_rows_json(r, ec);
  r.assumptions.push_back("J(Q) = {0} (random-subset model with a trivial Mordell-Weil image)");
}

void cmd_heuristic_contrast(Options& o) {
  Common c = common(o);
  auto F = parse_poly_factors(o.str("F"));
  ZPoly G = parse_int_poly(o.str("G"));
  ContrastReport cr = forced_torsion_contrast(F, G, heuristic_config(o, c));
  Report& r = o.report();
  emptying_rows_json(r, cr.random_model);
  for (size_t i = 0; i < cr.rows.size(); ++i) {
    r.rows[i]["actual_model"] = cr.rows[i].actual_model;
    r.rows[i]["forced_by"] = cr.rows[i].forced_by;
  }
  r.result["certification"] = cr.certification;
  r.result["actual_always_zero"] = true;
  for (const auto& row : cr.rows) r.result["actual_always_zero"] = r.result["actual_always_zero"].get<bool>() && row.actual_model == 0;
  r.assumptions.push_back("J(Q) = {0} in the random-subset model");
}

void cmd_heuristic_smooth(Options& o) {
  Common c = common(o);
  CurveSpec spec = o.curve();
  HeuristicConfig h = heuristic_config(o, c);
  h.u = o.real("u", 0.5);
  SmoothnessResult s = spec.elliptic() ? smoothness_stats(spec.elliptic_q(), h) : smoothness_stats(spec.hyperelliptic_q(), h);
  Report& r = o.report();
  for (const auto& row : s.rows) r.rows.push_back({{"v", row.v}, {"order", big_json(row.order)}, {"smooth", row.smooth}});
  r.result["smooth_bound"] = big_json(s.smooth_bound);
  r.result["good_places"] = s.good;
  r.result["smooth_places"] = s.smooth;
  r.result["fraction"] = s.fraction;
  r.result["bad_places"] = s.bad_places;
}

void cmd_heuristic_density(Options& o) {
  Common c = common(o);
  EllipticModel E = o.curve().elliptic_q();
  TorsionDensity td = torsion_density(E, big(o.num("ell", 2)), static_cast<unsigned>(o.num("nmax", 8)), o.num("bound"), c.jobs);
  Report& r = o.report();
  bool decreasing = true;
  for (size_t i = 0; i < td.rows.size(); ++i) {
    r.rows.push_back({{"n", td.rows[i].n}, {"count", td.rows[i].count}, {"density", td.rows[i].density}});
    if (i > 0) decreasing = decreasing && td.rows[i].density < td.rows[i - 1].density;
  }
  r.result["places"] = td.places;
  r.result["strictly_decreasing"] = decreasing;
}

void cmd_constant_threshold(Options& o) {
  Common c = common(o);
  FqHyperelliptic C = o.curve().hyperelliptic_fq();
  ThresholdScan ts = threshold_scan(C, big(o.num("ell", 2)), static_cast<unsigned>(o.num("nmax", 20)), c.budget);
  Report& r = o.report();
  for (const auto& row : ts.rows) {
    r.rows.push_back({{"n", row.n},
                      {"r", row.r},
                      {"order", big_json(row.order)},
                      {"q_n", big_json(row.lhs)},
                      {"bound", big_json(row.rhs)},
                      {"holds", row.holds}});
  }
  r.result["L"] = lpoly_json(ts.L);
  r.result["first_n"] = ts.first ? Json(*ts.first) : Json();
}

void cmd_constant_point_search(Options& o) {
  Common c = common(o);
  FqHyperelliptic C = o.curve().hyperelliptic_fq();
  PointSearchResult ps =
      prime_to_ell_point_search_any(C, big(o.num("ell", 2)), static_cast<unsigned>(o.num("n", 1)), c.budget);
  Report& r = o.report();
  const FiniteField& F = *ps.field;
  r.result["model"] = ps.model;
  r.result["n"] = ps.n;
  r.result["requested_n"] = ps.requested_n;
  r.result["jacobian_order"] = big_json(ps.jacobian_order);
  r.result["infinity_witness"] = ps.infinity_witness;
  r.result["points_tested"] = ps.points_tested;
  r.result["scan_complete"] = ps.scan_complete;
  if (ps.witness) {
    Json w = {{"x", F.format(ps.witness->x)},
              {"y", F.format(ps.witness->y)},
              {"order", big_json(ps.witness->order)},
              {"divisor", ps.witness->divisor}};
    if (ps.witness->source_point) {
      w["source_x"] = F.format(ps.witness->source_point->first);
      w["source_y"] = F.format(ps.witness->source_point->second);
    }
    r.result["witness"] = w;
    r.rows.push_back(w);
  } else {
    r.result["witness"] = Json();
  }
}

void cmd_constant_dm(Options& o) {
  common(o);
  DmReport d = dm_affine_check(static_cast<unsigned>(o.num("m", 3)), static_cast<unsigned>(o.num("brute_max", 3)));
  Report& r = o.report();
  r.result["m"] = d.m;
  r.result["field_order"] = d.field_order;
  r.result["affine_points"] = d.algebraic;
  r.result["brute_force"] = d.brute_force ? Json(*d.brute_force) : Json();
  r.result["certificate"] = d.certificate;
  r.result["agree"] = d.agree;
  r.result["projective_question"] = "unresolved";
  r.rows.push_back({{"m", d.m}, {"affine_points", d.algebraic}, {"brute_force", r.result["brute_force"]}});
  r.notes.push_back(d.note);
  if (!d.agree) {
    r.status = "mismatch";
    r.exit_code = 1;
  }
}

void cmd_constant_brell(Options& o) {
  common(o);
  BrellReport b = brell_factor_report(static_cast<unsigned>(o.num("nmax", 4)), static_cast<unsigned>(o.num("threshold_nmax", 12)));
  Report& r = o.report();
  r.result["L_C0"] = b.L_C0.format();
  r.result["L_supersingular"] = b.L_ss.format();
  r.result["L_ordinary"] = b.L_ord.format();
  r.result["product"] = b.product.format_list();
  r.result["identity_holds"] = b.identity_holds;
  r.result["supersingular_factor_is_ordinary"] = b.ss_ordinary;
  r.result["ordinary_factor_is_ordinary"] = b.ord_ordinary;
  r.result["c0_points_over_F3"] = b.c0_points;
  r.result["threshold_excluded_n"] = b.threshold_excluded;
  bool ok = b.identity_holds;
  for (const auto& q : b.quotient_rows) {
    r.rows.push_back({{"n", q.n},
                      {"affine_points", q.affine_points},
                      {"to_supersingular", q.to_ss},
                      {"to_ordinary", q.to_ord},
                      {"sent_to_infinity", q.ord_skipped},
                      {"ok", q.ok}});
    ok = ok && q.ok;
  }
  if (!ok) {
    r.status = "mismatch";
    r.exit_code = 1;
  }
}

// One point per line: coordinates separated by ';' or whitespace, each an
// integer (prime-field element) or a coordinate list [d0, d1, ...].
std::vector<std::vector<FieldElem>> parse_points(const std::string& text, const FiniteField& F) {
  std::vector<std::vector<FieldElem>> pts;
  size_t lineno = 0, start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    std::string line = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    start = end == std::string::npos ? text.size() : end + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::vector<FieldElem> coords;
    size_t i = 0;
    auto bad = [&](const std::string& msg) {
      fail(ErrorCode::kParse, "points line " + std::to_string(lineno) + ", column " + std::to_string(i + 1) + ": " + msg);
    };
    while (i < line.size()) {
      char ch = line[i];
      if (ch == ' ' || ch == '\t' || ch == ';' || ch == '\r') {
        ++i;
        continue;
      }
      std::vector<std::int64_t> digits;
      auto read_int = [&]() {
        size_t s = i;
        if (i < line.size() && line[i] == '-') ++i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
        if (s == i || (i == s + 1 && line[s] == '-')) bad("expected an integer");
        return std::stoll(line.substr(s, i - s));
      };
      if (ch == '[') {
        ++i;
        while (true) {
          while (i < line.size() && line[i] == ' ') ++i;
          digits.push_back(read_int());
          while (i < line.size() && line[i] == ' ') ++i;
          if (i < line.size() && line[i] == ',') {
            ++i;
            continue;
          }
          if (i < line.size() && line[i] == ']') {
            ++i;
            break;
          }
          bad("expected ',' or ']'");
        }
      } else {
        digits.push_back(read_int());
      }
      if (digits.size() > F.degree()) bad("too many coordinates for " + F.describe());
      coords.push_back(F.from_coeffs(digits));
    }
    if (!coords.empty()) pts.push_back(std::move(coords));
  }
  if (pts.empty()) fail(ErrorCode::kInvalidArgument, "no points supplied");
  return pts;
}

void cmd_constant_frobenius(Options& o) {
  common(o);
  const std::string field = o.str("field");
  u64 p = 0, n = 1;
  if (auto comma = field.find(','); comma != std::string::npos) {
    p = parse_u64(field.substr(0, comma), "--field");
    n = parse_u64(field.substr(comma + 1), "--field");
  } else {
    p = parse_u64(field, "--field");
  }
  if (n == 0 || n > 64) fail(ErrorCode::kInvalidArgument, "--field: extension degree must lie in 1..64");
  FieldPtr K = FiniteField::extension(p, static_cast<unsigned>(n));
  std::string text;
  if (o.has("points")) {
    const std::string path = o.str("points");
    o.report().inputs.push_back(hash_input("points", path));
    text = read_file(path);
  } else {
    text = o.str("points_text");
  }
  FrobeniusReport fr = frobenius_iteration_check(K, o.num("q", p), parse_points(text, *K), static_cast<unsigned>(o.num("nmax", 6)));
  Report& r = o.report();
  for (const auto& pt : fr.points) {
    r.rows.push_back({{"point", elems_json(*K, pt.coords)},
                      {"degree", pt.degree},
                      {"first_n", pt.first_n},
                      {"fixed", pt.fixed},
                      {"consistent", pt.consistent}});
  }
  r.result["field"] = K->describe();
  r.result["q"] = fr.q;
  r.result["first_n_all"] = fr.first_all == 0 ? Json() : Json(fr.first_all);
  r.result["consistent"] = fr.consistent;
  if (!fr.consistent) {
    r.status = "mismatch";
    r.exit_code = 1;
  }
}

using Handler = std::function<void(Options&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h = {
      {"curve count", cmd_curve_count},
      {"curve lpoly", cmd_curve_lpoly},
      {"curve jac-order", cmd_curve_jac_order},
      {"curve reduce", cmd_curve_reduce},
      {"sieve hypex", cmd_sieve_hypex},
      {"sieve cover", cmd_sieve_cover},
      {"sieve local", cmd_sieve_local},
      {"sieve packet", cmd_sieve_packet},
      {"sieve projected-demo", cmd_sieve_projected},
      {"search coprime-chain", cmd_search_chain},
      {"search torsion-bound", cmd_search_torsion_bound},
      {"heuristic emptying", cmd_heuristic_emptying},
      {"heuristic contrast", cmd_heuristic_contrast},
      {"heuristic smooth", cmd_heuristic_smooth},
      {"heuristic torsion-density", cmd_heuristic_density},
      {"constant threshold", cmd_constant_threshold},
      {"constant point-search", cmd_constant_point_search},
      {"constant dm", cmd_constant_dm},
      {"constant brell", cmd_constant_brell},
      {"constant frobenius", cmd_constant_frobenius},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : handlers()) v.push_back(name);
    v.push_back("reproduce");
    return v;
  }();
  return names;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kParse:
    case ErrorCode::kUnsupported:
      return 2;
    case ErrorCode::kBudgetExceeded:
      return 3;
    default:
      return 1;
  }
}

Report run_command(const std::string& subcommand, const Json& config) {
  if (subcommand == "reproduce") return run_reproduce(config);
  for (const auto& [name, fn] : handlers()) {
    if (name != subcommand) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.subcommand = subcommand;
    Options o(config, rep);
    const bool timing = o.flag("timing");
    rep.config.erase("timing");
    fn(o);
    for (const auto& [k, v] : config.items()) {
      if (!rep.config.contains(k) && k != "timing") {
        fail(ErrorCode::kInvalidArgument, "option --" + k + " does not apply to '" + subcommand + "'");
      }
    }
    if (timing) rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
  fail(ErrorCode::kInvalidArgument, "unknown subcommand '" + subcommand + "'");
}

}  // namespace brsieve
