#include "heuristic/heuristic.hpp"

#include <cmath>

#include "common/parallel.hpp"
#include "ff/factor.hpp"
#include "ff/modular.hpp"
#include "jacobian/structure.hpp"
#include "sieve/sieve.hpp"

namespace brsieve {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per (seed, place, trial), so any split of the trials
// over workers reproduces the same draws.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t v, std::uint64_t trial) {
  return splitmix64(splitmix64(splitmix64(seed) ^ v) ^ trial);
}

// Uniform integer in [0, n] by rejection, independent of the standard
// library's distribution implementation.
std::uint64_t uniform_upto(std::mt19937_64& rng, std::uint64_t n) {
  if (n == ~std::uint64_t{0}) return rng();
  const std::uint64_t range = n + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % range;
}

// Floyd's sampling of a size-c subset of {0..M-1}, tracking only whether 0 is drawn.
bool subset_contains_zero(std::mt19937_64& rng, std::uint64_t c, std::uint64_t M) {
  for (std::uint64_t j = M - c; j < M; ++j) {
    if (uniform_upto(rng, j) == 0) return true;
  }
  return false;
}

template <class Count>
SmoothnessResult smoothness_impl(std::uint64_t B, double u, unsigned jobs, Count order_at) {
  SmoothnessResult res;
  res.bound = B;
  res.u = u;
  res.smooth_bound = smooth_bound(B, u);
  auto primes = modular::primes_between(2, B);
  struct Cell {
    bool good = false;
    BigInt order;
  };
  auto cells = parallel_map<Cell>(primes.size(), jobs, [&](size_t i) {
    Cell c;
    c.good = order_at(primes[i], &c.order);
    return c;
  });
  for (size_t i = 0; i < primes.size(); ++i) {
    if (!cells[i].good) {
      res.bad_places.push_back(primes[i]);
      continue;
    }
    SmoothRow row{primes[i], cells[i].order, is_smooth(cells[i].order, res.smooth_bound)};
    ++res.good;
    if (row.smooth) ++res.smooth;
    res.rows.push_back(std::move(row));
  }
  res.fraction = res.good ? static_cast<double>(res.smooth) / res.good : 0.0;
  return res;
}

}  // namespace

void HeuristicConfig::validate() const {
  if (!(u > 0 && u < 1)) fail(ErrorCode::kInvalidArgument, "smoothness exponent u must lie in (0, 1)");
  if (trials < 1) fail(ErrorCode::kInvalidArgument, "trials must be >= 1");
  if (d < 1) fail(ErrorCode::kInvalidArgument, "d must be >= 1");
}

BigInt smooth_bound(std::uint64_t B, double u) {
  // floor(B^u) in long double; the relative guard absorbs rounding when B^u is an integer
  long double x = std::pow(static_cast<long double>(B), static_cast<long double>(u));
  return big(static_cast<std::uint64_t>(std::floor(x * (1.0L + 1e-12L))));
}

SmoothnessResult smoothness_stats(const HyperellipticModel& C, const HeuristicConfig& cfg) {
  cfg.validate();
  C.validate();
  return smoothness_impl(cfg.bound, cfg.u, cfg.jobs, [&](std::uint64_t v, BigInt* order) {
    auto red = good_reduction(C, v);
    if (!red.good) return false;
    *order = jacobian_order(lpolynomial(*red.curve, cfg.budget), 1);
    return true;
  });
}

SmoothnessResult smoothness_stats(const EllipticModel& E, const HeuristicConfig& cfg) {
  cfg.validate();
  E.validate();
  return smoothness_impl(cfg.bound, cfg.u, cfg.jobs, [&](std::uint64_t v, BigInt* order) {
    auto red = good_reduction(E, v);
    if (!red.good || v == 2) return false;
    *order = big(count_points(*red.curve));
    return true;
  });
}

std::vector<EmptyingRow> emptying_rows(const std::vector<EmptyingPlace>& places, unsigned trials, std::uint64_t seed,
                                       unsigned jobs) {
  std::vector<const EmptyingPlace*> used;
  for (const auto& p : places) {
    if (!p.flagged) used.push_back(&p);
  }
  // first_fail[t] = index of the first place whose subset misses 0 (used.size() if none)
  constexpr size_t kChunk = 256;
  const size_t chunks = (trials + kChunk - 1) / kChunk;
  auto parts = parallel_map<std::vector<size_t>>(chunks, jobs, [&](size_t c) {
    std::vector<size_t> out;
    for (size_t t = c * kChunk; t < std::min<size_t>(trials, (c + 1) * kChunk); ++t) {
      size_t k = 0;
      for (; k < used.size(); ++k) {
        std::mt19937_64 rng(stream_seed(seed, used[k]->v, t));
        if (!subset_contains_zero(rng, used[k]->curve_points, to_u64(used[k]->M))) break;
      }
      out.push_back(k);
    }
    return out;
  });
  std::vector<unsigned> fails_at(used.size() + 1, 0);
  for (const auto& part : parts) {
    for (size_t k : part) ++fails_at[k];
  }
  std::vector<EmptyingRow> rows;
  BigRat survive = 1;
  unsigned emptied = 0;
  for (size_t k = 0; k < used.size(); ++k) {
    survive *= BigRat(big(used[k]->curve_points), used[k]->M);
    survive.canonicalize();
    emptied += fails_at[k];
    EmptyingRow row;
    row.size = k + 1;
    row.v = used[k]->v;
    row.analytic = 1 - survive;
    row.sampled = static_cast<double>(emptied) / trials;
    const double p = row.analytic.get_d();
    row.half_width = 3.0 * std::sqrt(p * (1.0 - p) / trials);
    row.within_3sigma = std::fabs(row.sampled - p) <= row.half_width;
    rows.push_back(std::move(row));
  }
  return rows;
}

EmptyingCurve emptying_probability(const HyperellipticModel& C, const HeuristicConfig& cfg, const BigInt& mw_order) {
  cfg.validate();
  if (mw_order != 1) fail(ErrorCode::kUnsupported, "the random-subset model is only defined for a trivial Mordell-Weil group");
  C.validate();
  EmptyingCurve out;
  out.d = cfg.d;
  out.trials = cfg.trials;
  out.seed = cfg.seed;
  auto primes = modular::primes_between(3, cfg.bound);
  auto cells = parallel_map<EmptyingPlace>(primes.size(), cfg.jobs, [&](size_t i) {
    EmptyingPlace p;
    p.v = primes[i];
    auto red = good_reduction(C, p.v);
    if (!red.good) {
      p.note = red.reason;
      return p;
    }
    p.curve_points = count_points(*red.curve);
    p.jac_order = jacobian_order(lpolynomial(*red.curve, cfg.budget), 1);
    p.M = p.jac_order / primary_part(p.jac_order, cfg.d);
    if (p.M < big(p.curve_points)) {
      p.flagged = true;
      p.note = "prime-to-d part smaller than #C(F_v); place excluded";
    }
    return p;
  });
  for (auto& p : cells) {
    if (p.jac_order != 0) out.places.push_back(std::move(p));
  }
  out.rows = emptying_rows(out.places, cfg.trials, cfg.seed, cfg.jobs);
  return out;
}

ContrastReport forced_torsion_contrast(const std::vector<ZPoly>& F_factors, const ZPoly& G, const HeuristicConfig& cfg) {
  PacketReport cert = torsion_packet_certify(F_factors, G);
  if (!cert.pass) fail(ErrorCode::kInvalidArgument, "torsion-packet certification missing: " + cert.failure);
  ContrastReport rep;
  rep.certification = cert.local_method;
  HeuristicConfig c2 = cfg;
  c2.d = 2;
  ZPoly F = ZPoly::constant(1);
  for (const auto& f : F_factors) F = F * f;
  const ZPoly FG = F * G;
  rep.random_model = emptying_probability(HyperellipticModel{FG}, c2);
  for (const auto& row : rep.random_model.rows) {
    ContrastRow cr;
    cr.size = row.size;
    cr.v = row.v;
    cr.random_model = row.analytic;
    cr.random_sampled = row.sampled;
    cr.actual_model = 0;
    auto rs = roots(FG.reduce(FiniteField::prime(row.v)));
    cr.forced_by = rs.empty() ? "adelic packet point" : "Weierstrass root x = " + std::to_string(rs.front().packed());
    rep.rows.push_back(std::move(cr));
  }
  return rep;
}

TorsionDensity torsion_density(const EllipticModel& E, const BigInt& ell, unsigned n_max, std::uint64_t bound, unsigned jobs) {
  if (ell < 2 || !is_probable_prime(ell)) fail(ErrorCode::kInvalidArgument, "ell must be prime");
  E.validate();
  if (bound > kStructureEnumerationLimit) fail(ErrorCode::kBudgetExceeded, "torsion density bound exceeds the enumeration limit");
  TorsionDensity out;
  out.ell = ell;
  out.bound = bound;
  auto primes = modular::primes_between(3, bound);
  // -1 marks a bad place
  auto vals = parallel_map<int>(primes.size(), jobs, [&](size_t i) {
    auto red = good_reduction(E, primes[i]);
    if (!red.good) return -1;
    BigInt N = big(count_points(*red.curve));
    BigInt x = elliptic_sylow_exponent(*red.curve, N, ell);
    return static_cast<int>(split_valuation(x, ell).first);
  });
  for (unsigned n = 0; n <= n_max; ++n) out.rows.push_back({n, 0, 0.0});
  for (int e : vals) {
    if (e < 0) continue;
    ++out.places;
    for (unsigned n = 0; n <= n_max && static_cast<int>(n) <= e; ++n) ++out.rows[n].count;
  }
  for (auto& r : out.rows) r.density = out.places ? static_cast<double>(r.count) / out.places : 0.0;
  return out;
}

}  // namespace brsieve
