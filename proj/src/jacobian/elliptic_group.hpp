#pragma once

#include <random>
#include <string>
#include <vector>

#include "curves/curve_models.hpp"

namespace brsieve {

struct EllipticPoint {
  FieldElem x;
  FieldElem y;
  bool infinity = true;

  static EllipticPoint at_infinity() { return {}; }
  static EllipticPoint affine(FieldElem x, FieldElem y) { return {x, y, false}; }

  friend bool operator==(const EllipticPoint& a, const EllipticPoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

// Chord-and-tangent law on a long Weierstrass model.
class EllipticGroup {
 public:
  using Element = EllipticPoint;

  explicit EllipticGroup(FqElliptic curve) : E_(std::move(curve)) {}

  const FqElliptic& curve() const { return E_; }
  Element identity() const { return EllipticPoint::at_infinity(); }
  Element add(const Element& P, const Element& Q) const;
  Element neg(const Element& P) const;
  bool contains(const Element& P) const;
  // Uniform over affine x with at least one y; odd characteristic.
  Element random_element(std::mt19937_64& rng) const;
  // Every point, identity first, then affine points sorted by (x, y).
  std::vector<Element> points(std::uint64_t budget) const;
  // Points with the given x-coordinate (0, 1 or 2 of them).
  std::vector<Element> lift_x(FieldElem x) const;

  std::string format(const Element& P) const;

 private:
  FqElliptic E_;
};

}  // namespace brsieve
