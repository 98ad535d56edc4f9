#include "jacobian/elliptic_group.hpp"

#include <algorithm>

namespace brsieve {

EllipticPoint EllipticGroup::neg(const Element& P) const {
  if (P.infinity) return P;
  const FiniteField& F = *E_.field();
  const auto& a = E_.a();
  // -(x, y) = (x, -y - a1 x - a3)
  return EllipticPoint::affine(P.x, F.sub(F.neg(P.y), F.add(F.mul(a[0], P.x), a[2])));
}

EllipticPoint EllipticGroup::add(const Element& P, const Element& Q) const {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const FiniteField& F = *E_.field();
  const auto& [a1, a2, a3, a4, a6] = E_.a();
  FieldElem lambda;
  FieldElem nu;
  if (P.x == Q.x) {
    if (neg(P) == Q) return identity();
    // tangent
    FieldElem denom = F.add(F.add(F.mul(F.from_int(2), P.y), F.mul(a1, P.x)), a3);
    FieldElem x2 = F.sqr(P.x);
    FieldElem num = F.sub(F.add(F.add(F.mul(F.from_int(3), x2), F.mul(F.from_int(2), F.mul(a2, P.x))), a4), F.mul(a1, P.y));
    lambda = F.div(num, denom);
    FieldElem num2 = F.sub(F.add(F.add(F.neg(F.mul(x2, P.x)), F.mul(a4, P.x)), F.mul(F.from_int(2), a6)), F.mul(a3, P.y));
    nu = F.div(num2, denom);
  } else {
    FieldElem dx = F.sub(Q.x, P.x);
    lambda = F.div(F.sub(Q.y, P.y), dx);
    nu = F.div(F.sub(F.mul(P.y, Q.x), F.mul(Q.y, P.x)), dx);
  }
  FieldElem x3 = F.sub(F.sub(F.sub(F.add(F.sqr(lambda), F.mul(a1, lambda)), a2), P.x), Q.x);
  FieldElem y3 = F.sub(F.sub(F.neg(F.mul(F.add(lambda, a1), x3)), nu), a3);
  return EllipticPoint::affine(x3, y3);
}

bool EllipticGroup::contains(const Element& P) const {
  if (P.infinity) return true;
  const FiniteField& F = *E_.field();
  const auto& [a1, a2, a3, a4, a6] = E_.a();
  FieldElem lhs = F.add(F.sqr(P.y), F.mul(F.add(F.mul(a1, P.x), a3), P.y));
  FieldElem rhs = F.add(F.add(F.mul(F.sqr(P.x), F.add(P.x, a2)), F.mul(a4, P.x)), a6);
  return lhs == rhs;
}

std::vector<EllipticPoint> EllipticGroup::lift_x(FieldElem x) const {
  const FiniteField& F = *E_.field();
  if (F.characteristic() == 2) fail(ErrorCode::kUnsupported, "elliptic point lifting in characteristic 2");
  const auto& [a1, a2, a3, a4, a6] = E_.a();
  // y^2 + b y - c = 0 with b = a1 x + a3, c = x^3 + a2 x^2 + a4 x + a6
  FieldElem b = F.add(F.mul(a1, x), a3);
  FieldElem c = F.add(F.add(F.mul(F.sqr(x), F.add(x, a2)), F.mul(a4, x)), a6);
  FieldElem disc = F.add(F.sqr(b), F.mul(F.from_int(4), c));
  auto r = F.sqrt(disc);
  if (!r) return {};
  FieldElem half = F.inv(F.from_int(2));
  FieldElem y1 = F.mul(F.sub(*r, b), half);
  FieldElem y2 = F.mul(F.sub(F.neg(*r), b), half);
  if (y1 == y2) return {EllipticPoint::affine(x, y1)};
  if (y2 < y1) std::swap(y1, y2);
  return {EllipticPoint::affine(x, y1), EllipticPoint::affine(x, y2)};
}

EllipticPoint EllipticGroup::random_element(std::mt19937_64& rng) const {
  const FiniteField& F = *E_.field();
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto pts = lift_x(F.element(rng() % F.order()));
    if (pts.empty()) continue;
    return pts[rng() % pts.size()];
  }
  return identity();
}

std::vector<EllipticPoint> EllipticGroup::points(std::uint64_t budget) const {
  const FiniteField& F = *E_.field();
  if (F.order() > budget) fail(ErrorCode::kBudgetExceeded, "point enumeration over " + F.describe() + " exceeds budget");
  std::vector<EllipticPoint> out{identity()};
  for (std::uint64_t i = 0; i < F.order(); ++i) {
    for (auto& P : lift_x(F.element(i))) out.push_back(P);
  }
  return out;
}

std::string EllipticGroup::format(const Element& P) const {
  if (P.infinity) return "O";
  const FiniteField& F = *E_.field();
  return "(" + F.format(P.x) + ", " + F.format(P.y) + ")";
}

}  // namespace brsieve
