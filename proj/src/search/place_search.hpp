#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curves/curve_models.hpp"

namespace brsieve {

struct PlaceCount {
  std::uint64_t v = 0;
  bool good = false;
  std::string note;
  std::uint64_t count = 0;  // #E(F_v) when good
};

// #E(F_v) for every prime v in [lo, hi]; bad places are listed with a reason.
std::vector<PlaceCount> ecount_scan(const EllipticModel& E, std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1);

struct ChainLink {
  std::uint64_t v = 0;
  BigInt order;
};

struct ChainState {
  BigInt aux_prime;
  std::vector<ChainLink> chain;
  BigInt radical;  // radical of the product of chain orders
  std::uint64_t scanned_up_to = 0;
  bool target_reached = false;
};

// Greedy pairwise-coprime chain: accept good v (increasing) when the
// auxiliary prime is a non-square mod v and gcd(#E(F_v), n * p) = 1.
ChainState coprime_chain(const EllipticModel& E, std::uint64_t aux_prime, std::uint64_t v_bound, unsigned target_len,
                         unsigned jobs = 1);

// Re-checks coprimality, inertness and p-avoidance from scratch (fresh point
// counts). Returns an empty string when everything holds, else the first problem.
std::string verify_chain(const EllipticModel& E, const ChainState& state);

// gcd of #E(F_v) over the given places (all good and odd).
BigInt torsion_bound(const EllipticModel& E, const std::vector<std::uint64_t>& places);

}  // namespace brsieve
