#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curves/lpoly.hpp"

namespace brsieve {

struct HeuristicConfig {
  BigInt d = 1;             // projection integer; 1 means no projection
  std::uint64_t bound = 0;  // places v <= bound
  double u = 0.5;           // smoothness exponent
  unsigned trials = 10'000;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultCountBudget;
  unsigned jobs = 1;

  void validate() const;
};

struct SmoothRow {
  std::uint64_t v = 0;
  BigInt order;
  bool smooth = false;
};

struct SmoothnessResult {
  std::uint64_t bound = 0;
  double u = 0;
  BigInt smooth_bound;  // floor(B^u)
  std::vector<SmoothRow> rows;
  std::vector<std::uint64_t> bad_places;
  unsigned good = 0;
  unsigned smooth = 0;
  double fraction = 0;
};

// Fraction of good v <= B for which #J(F_v) is floor(B^u)-smooth.
SmoothnessResult smoothness_stats(const HyperellipticModel& C, const HeuristicConfig& cfg);
SmoothnessResult smoothness_stats(const EllipticModel& E, const HeuristicConfig& cfg);

// floor(B^u) in long double, with a small relative guard so that exact
// integer powers are not rounded down.
BigInt smooth_bound(std::uint64_t B, double u);

struct EmptyingPlace {
  std::uint64_t v = 0;
  std::uint64_t curve_points = 0;  // #C(F_v)
  BigInt jac_order;                // #J(F_v)
  BigInt M;                        // prime-to-d part of #J(F_v)
  bool flagged = false;            // M < #C(F_v): no subset of that size exists
  std::string note;
};

struct EmptyingRow {
  size_t size = 0;        // |S|
  std::uint64_t v = 0;    // place added at this step
  BigRat analytic;        // exact emptying probability 1 - prod #C/M
  double sampled = 0;     // empirical emptying frequency
  double half_width = 0;  // 3 sigma of the analytic Bernoulli
  bool within_3sigma = false;
};

struct EmptyingCurve {
  BigInt d;
  unsigned trials = 0;
  std::uint64_t seed = 0;
  std::vector<EmptyingPlace> places;  // all good places considered, flagged ones included
  std::vector<EmptyingRow> rows;      // nested S over unflagged places, increasing v
};

// Random-subset model with a trivial Mordell-Weil image {0}: at each place the
// image of C is replaced by a uniform random subset of size #C(F_v) of a group
// of order M_v, and S survives iff every subset contains 0.
EmptyingCurve emptying_probability(const HyperellipticModel& C, const HeuristicConfig& cfg, const BigInt& mw_order = 1);

// Analytic and sampled emptying for nested place lists given (#C, M) pairs.
std::vector<EmptyingRow> emptying_rows(const std::vector<EmptyingPlace>& places, unsigned trials, std::uint64_t seed,
                                       unsigned jobs);

struct ContrastRow {
  size_t size = 0;
  std::uint64_t v = 0;
  BigRat random_model;  // analytic emptying under the random model
  double random_sampled = 0;
  int actual_model = 0;   // always 0: the packet point survives
  std::string forced_by;  // "Weierstrass root x = 2" or "adelic packet point"
};

struct ContrastReport {
  std::vector<ContrastRow> rows;
  EmptyingCurve random_model;
  std::string certification;
};

// y^2 = F*G with d = 2: random-model prediction next to the structural answer.
ContrastReport forced_torsion_contrast(const std::vector<ZPoly>& F_factors, const ZPoly& G, const HeuristicConfig& cfg);

struct DensityRow {
  unsigned n = 0;
  unsigned count = 0;  // places whose group exponent is divisible by ell^n
  double density = 0;  // empirical density at B
};

struct TorsionDensity {
  BigInt ell;
  std::uint64_t bound = 0;
  unsigned places = 0;  // good odd places used
  std::vector<DensityRow> rows;  // n = 0..n_max
};

// Fraction of good v <= B with a point of order ell^n in E(F_v).
TorsionDensity torsion_density(const EllipticModel& E, const BigInt& ell, unsigned n_max, std::uint64_t bound,
                               unsigned jobs = 1);

}  // namespace brsieve
