#pragma once

#include <random>
#include <string>

#include "curves/curve_models.hpp"

namespace brsieve {

// Reduced divisor class (u, v): u monic, deg v < deg u <= g, u | v^2 - f.
struct MumfordDivisor {
  FqPoly u;
  FqPoly v;

  friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) { return a.u == b.u && a.v == b.v; }
};

// Jacobian of an odd-degree model y^2 = f(x); divisors are taken relative to
// the point at infinity.
class MumfordGroup {
 public:
  using Element = MumfordDivisor;

  explicit MumfordGroup(FqHyperelliptic curve);

  const FqHyperelliptic& curve() const { return C_; }
  unsigned genus() const { return C_.genus(); }

  Element identity() const;
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  bool contains(const Element& a) const;
  // Sum of g random affine points.
  Element random_element(std::mt19937_64& rng) const;

  // [P - inf] for an affine point P = (x, y) on the curve.
  Element from_point(FieldElem x, FieldElem y) const;
  // Composition without the reduction loop (u may have degree > g).
  Element compose(const Element& a, const Element& b) const;
  Element reduce(Element d) const;

  // "(u = [..], v = [..])"
  std::string format(const Element& d) const;

 private:
  FqHyperelliptic C_;
};

// Validated addition: both inputs must be reduced Mumford pairs for the curve.
MumfordDivisor cantor_add(const MumfordGroup& group, const MumfordDivisor& a, const MumfordDivisor& b);

}  // namespace brsieve
