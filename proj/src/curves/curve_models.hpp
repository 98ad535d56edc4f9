#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "ff/poly.hpp"

namespace brsieve {

inline constexpr std::uint64_t kDefaultCountBudget = 100'000'000;

// y^2 = f(x) over Q, f with integer coefficients.
struct HyperellipticModel {
  ZPoly f;

  unsigned genus() const { return static_cast<unsigned>((f.degree() + 1) / 2 - 1); }
  bool odd_degree() const { return f.degree() % 2 == 1; }
  // deg f >= 3 and f squarefree over Q.
  void validate() const;
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
struct EllipticModel {
  std::array<BigInt, 5> a;  // a1, a2, a3, a4, a6

  BigInt discriminant() const;
  void validate() const;
};

// y^2 = f(x) over F_q, odd characteristic, deg f >= 3, f squarefree.
class FqHyperelliptic {
 public:
  explicit FqHyperelliptic(FqPoly f);

  const FqPoly& f() const { return f_; }
  const FieldPtr& field() const { return f_.field(); }
  unsigned genus() const { return static_cast<unsigned>((f_.degree() + 1) / 2 - 1); }
  bool odd_degree() const { return f_.degree() % 2 == 1; }

 private:
  FqPoly f_;
};

// Long Weierstrass curve over F_q with nonzero discriminant.
class FqElliptic {
 public:
  FqElliptic(FieldPtr field, std::array<FieldElem, 5> a);

  const FieldPtr& field() const { return field_; }
  const std::array<FieldElem, 5>& a() const { return a_; }
  FieldElem discriminant() const;
  // Completed-square model y^2 = x^3 + (b2/4)x^2 + (b4/2)x + b6/4 (odd characteristic).
  FqHyperelliptic to_hyperelliptic() const;
  // Same curve with coefficients pushed into a larger field.
  FqElliptic base_change(const FieldPtr& larger) const;

 private:
  FieldPtr field_;
  std::array<FieldElem, 5> a_;
};

FieldElem elliptic_discriminant(const FiniteField& F, const std::array<FieldElem, 5>& a);

template <class Curve>
struct ReductionInfo {
  std::uint64_t place = 0;
  bool good = false;
  std::string reason;  // why the place is bad (empty when good)
  std::optional<Curve> curve;
};

ReductionInfo<FqHyperelliptic> good_reduction(const HyperellipticModel& model, std::uint64_t v);
ReductionInfo<FqElliptic> good_reduction(const EllipticModel& model, std::uint64_t v);

// Points on the smooth projective model over the base field.
std::uint64_t count_points(const FqHyperelliptic& curve);
std::uint64_t count_points(const FqElliptic& curve);
// Points over the degree-n extension of the base field; requires q^n <= budget.
std::uint64_t count_points_ext(const FqHyperelliptic& curve, unsigned n, std::uint64_t budget = kDefaultCountBudget);
std::uint64_t count_points_ext(const FqElliptic& curve, unsigned n, std::uint64_t budget = kDefaultCountBudget);

// Base change of a hyperelliptic curve to F_{q^n}.
FqHyperelliptic base_change(const FqHyperelliptic& curve, unsigned n);

// sum over x in F_Q of #{y : y^2 = f(x)}; coefficients of f must lie in the
// subfield of order `subfield_order` (used to count once per Frobenius orbit).
std::uint64_t count_affine_solutions(const FqPoly& f, std::uint64_t subfield_order);

}  // namespace brsieve
