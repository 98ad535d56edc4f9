#pragma once

#include <optional>
#include <utility>

#include "curves/curve_models.hpp"

namespace brsieve {

// Odd-degree model of an even-degree curve y^2 = f(x) obtained by sending a
// rational Weierstrass point (r, 0) to infinity:
//   t = 1/(x - r),  Y = y / (x - r)^{g+1},  Y^2 = t^{2g+2} f(r + 1/t).
struct OddDegreeModel {
  FqHyperelliptic source;
  FqHyperelliptic target;
  FieldElem root;

  // Image of an affine point of the source; nullopt for (r, 0), which maps to infinity.
  std::optional<std::pair<FieldElem, FieldElem>> map_point(FieldElem x, FieldElem y) const;
};

OddDegreeModel odd_degree_transform(const FqHyperelliptic& curve, FieldElem root);
// Uses the smallest root of f in the base field; fails when there is none.
OddDegreeModel odd_degree_transform(const FqHyperelliptic& curve);

}  // namespace brsieve
