#include "search/place_search.hpp"

#include "common/parallel.hpp"
#include "ff/factor.hpp"
#include "ff/modular.hpp"
#include "jacobian/elliptic_group.hpp"

namespace brsieve {
namespace {

bool within_hasse(std::uint64_t v, std::uint64_t n) {
  // (n - v - 1)^2 <= 4v
  BigInt t = big(n) - big(v) - 1;
  return t * t <= 4 * big(v);
}

bool aux_nonsquare(std::uint64_t aux, std::uint64_t v) {
  return v != 2 && modular::legendre(big(aux), v) == -1;
}

}  // namespace

std::vector<PlaceCount> ecount_scan(const EllipticModel& E, std::uint64_t lo, std::uint64_t hi, unsigned jobs) {
  E.validate();
  const auto primes = lo <= hi ? modular::primes_between(lo, hi) : std::vector<std::uint64_t>{};
  return parallel_map<PlaceCount>(primes.size(), jobs, [&](size_t i) {
    PlaceCount pc;
    pc.v = primes[i];
    auto red = good_reduction(E, pc.v);
    pc.good = red.good;
    if (!red.good) {
      pc.note = red.reason;
      return pc;
    }
    if (pc.v == 2) {
      pc.good = false;
      pc.note = "residue characteristic 2 (not counted)";
      return pc;
    }
    pc.count = count_points(*red.curve);
    if (!within_hasse(pc.v, pc.count)) fail(ErrorCode::kInvariantViolation, "Hasse bound violated at v = " + std::to_string(pc.v));
    return pc;
  });
}

ChainState coprime_chain(const EllipticModel& E, std::uint64_t aux_prime, std::uint64_t v_bound, unsigned target_len,
                         unsigned jobs) {
  if (aux_prime < 3 || !modular::is_prime(aux_prime)) fail(ErrorCode::kInvalidArgument, "auxiliary prime must be an odd prime");
  ChainState st;
  st.aux_prime = big(aux_prime);
  st.radical = 1;
  if (target_len == 0) {
    st.target_reached = true;
    return st;
  }
  // scan in parallel, accept sequentially in increasing v
  auto counts = ecount_scan(E, 3, v_bound, jobs);
  for (const auto& pc : counts) {
    st.scanned_up_to = pc.v;
    if (!pc.good || pc.v == aux_prime) continue;
    if (!aux_nonsquare(aux_prime, pc.v)) continue;
    BigInt n = big(pc.count);
    if (gcd(n, st.radical * st.aux_prime) != 1) continue;
    st.chain.push_back({pc.v, n});
    st.radical = radical(st.radical * n);
    if (st.chain.size() >= target_len) {
      st.target_reached = true;
      break;
    }
  }
  return st;
}

std::string verify_chain(const EllipticModel& E, const ChainState& state) {
  const std::uint64_t p = to_u64(state.aux_prime);
  for (size_t i = 0; i < state.chain.size(); ++i) {
    const auto& link = state.chain[i];
    auto red = good_reduction(E, link.v);
    if (!red.good) return "place " + std::to_string(link.v) + " has bad reduction";
    // recount by listing the points through the group law's x-lifting
    BigInt n = big(EllipticGroup(*red.curve).points(kDefaultCountBudget).size());
    if (n != link.order) return "order mismatch at v = " + std::to_string(link.v);
    if (!within_hasse(link.v, to_u64(n))) return "Hasse bound fails at v = " + std::to_string(link.v);
    if (!aux_nonsquare(p, link.v)) return "auxiliary prime is a square mod " + std::to_string(link.v);
    if (divisible(n, state.aux_prime)) return "auxiliary prime divides #E(F_" + std::to_string(link.v) + ")";
    for (size_t j = 0; j < i; ++j) {
      if (gcd(n, state.chain[j].order) != 1) {
        return "orders at " + std::to_string(state.chain[j].v) + " and " + std::to_string(link.v) + " share a factor";
      }
    }
  }
  return "";
}

BigInt torsion_bound(const EllipticModel& E, const std::vector<std::uint64_t>& places) {
  if (places.empty()) fail(ErrorCode::kInvalidArgument, "torsion bound needs at least one place");
  BigInt g = 0;
  for (std::uint64_t v : places) {
    if (v == 2) fail(ErrorCode::kInvalidArgument, "torsion bound uses odd places only");
    auto red = good_reduction(E, v);
    if (!red.good) fail(ErrorCode::kInvalidArgument, "bad reduction at " + std::to_string(v));
    g = gcd(g, big(count_points(*red.curve)));
  }
  return g;
}

}  // namespace brsieve
