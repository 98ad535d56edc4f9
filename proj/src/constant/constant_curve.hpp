#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curves/lpoly.hpp"

namespace brsieve {

struct ThresholdRow {
  unsigned n = 0;
  unsigned r = 0;      // v_ell(#J(F_{q^n}))
  BigInt order;        // #J(F_{q^n})
  BigInt lhs;          // q^n
  BigInt rhs;          // (2 g ell^r)^2
  bool holds = false;  // lhs > rhs
};

struct ThresholdScan {
  BigInt q;
  unsigned genus = 0;
  BigInt ell;
  LPolynomial L;
  std::vector<ThresholdRow> rows;
  std::optional<unsigned> first;  // smallest n with holds
};

// For each n <= n_max: the ell-adic valuation of #J(F_{q^n}) and whether
// q^n > (2 g ell^{r_n})^2, in exact integer arithmetic. Needs genus > 1.
ThresholdScan threshold_scan(const LPolynomial& L, const BigInt& ell, unsigned n_max);
ThresholdScan threshold_scan(const FqHyperelliptic& C, const BigInt& ell, unsigned n_max,
                             std::uint64_t budget = kDefaultCountBudget);

struct PointWitness {
  FieldElem x;
  FieldElem y;
  BigInt order;          // exact order of [P - inf]
  std::string divisor;   // Mumford form
  std::optional<std::pair<FieldElem, FieldElem>> source_point;  // preimage on an even-degree input
};

struct PointSearchResult {
  BigInt ell;
  unsigned n = 0;            // extension degree actually searched
  unsigned requested_n = 0;
  FieldPtr field;            // F_{q^n}
  BigInt jacobian_order;     // #J(F_{q^n})
  bool infinity_witness = false;  // inf on the model: [inf - inf] = 0 is trivially prime to ell
  std::optional<PointWitness> witness;  // first affine witness in (x, y) order
  std::uint64_t points_tested = 0;
  bool scan_complete = false;  // true when no witness exists among all affine points
  std::string model;           // "odd-degree" or "transformed at x = r over F_{q^k}"
};

// Scans the affine points of an odd-degree model over F_{q^n} for the first
// P with [P - inf] of order prime to ell.
PointSearchResult prime_to_ell_point_search(const FqHyperelliptic& C, const BigInt& ell, unsigned n,
                                            std::uint64_t budget = kDefaultCountBudget);

// Even-degree input: moves to the smallest multiple of n over which f has a
// root, transforms there, and searches the odd-degree model.
PointSearchResult prime_to_ell_point_search_any(const FqHyperelliptic& C, const BigInt& ell, unsigned n,
                                                std::uint64_t budget = kDefaultCountBudget);

struct DmReport {
  unsigned m = 0;
  std::uint64_t field_order = 0;
  std::optional<std::uint64_t> brute_force;  // affine count by enumeration
  std::uint64_t algebraic = 0;
  std::string certificate;
  bool agree = true;
  bool projective_resolved = false;
  std::string note;
};

// Affine F_{3^m}-points of (x^{3^m} - x + 1)(y^{3^m} - y - 1) = 1.
DmReport dm_affine_check(unsigned m, unsigned brute_force_max = 3);

struct QuotientRow {
  unsigned n = 0;
  std::uint64_t affine_points = 0;  // on C0 over F_{3^n}
  std::uint64_t to_ss = 0;          // images (x^2, y) landing on E_ss
  std::uint64_t to_ord = 0;         // images (1/x^2, y/x^3) landing on E_ord (x != 0)
  std::uint64_t ord_skipped = 0;    // x = 0, sent to infinity
  bool ok = false;
};

struct BrellReport {
  LPolynomial L_C0;
  LPolynomial L_ss;
  LPolynomial L_ord;
  ZPoly product;  // L_ss * L_ord
  bool identity_holds = false;
  bool ss_ordinary = false;
  bool ord_ordinary = false;
  std::uint64_t c0_points = 0;  // #C0(F_3)
  std::vector<QuotientRow> quotient_rows;
  std::vector<unsigned> threshold_excluded;  // n <= n_max where the ell = 2 threshold fails
};

BrellReport brell_factor_report(unsigned quotient_n_max = 4, unsigned threshold_n_max = 12);

// Cubic model y^2 = c x^3 + b x^2 + a x + d rescaled to Weierstrass form by
// (X, Y) = (c x, c y).
FqElliptic cubic_to_weierstrass(const FqPoly& cubic);

struct FrobeniusPointRow {
  std::vector<FieldElem> coords;
  unsigned degree = 0;  // smallest m with F^m fixing the point
  unsigned first_n = 0;  // smallest n with m | n!
  std::vector<bool> fixed;  // fixed[n - 1]: F^{n!}(P) == P, computed directly
  bool consistent = false;
};

struct FrobeniusReport {
  FieldPtr field;
  std::uint64_t q = 0;  // Frobenius x -> x^q
  unsigned n_max = 0;
  std::vector<FrobeniusPointRow> points;
  unsigned first_all = 0;  // smallest n fixing every point (0 if beyond n_max)
  bool consistent = false;
};

// q must be a power of the characteristic whose degree divides [F : F_p].
FrobeniusReport frobenius_iteration_check(const FieldPtr& field, std::uint64_t q,
                                          const std::vector<std::vector<FieldElem>>& points, unsigned n_max);

}  // namespace brsieve
