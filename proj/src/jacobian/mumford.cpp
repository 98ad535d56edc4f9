#include "jacobian/mumford.hpp"

namespace brsieve {

MumfordGroup::MumfordGroup(FqHyperelliptic curve) : C_(std::move(curve)) {
  if (!C_.odd_degree()) {
    fail(ErrorCode::kUnsupported, "explicit Jacobian arithmetic needs an odd-degree model; transform at a rational root first");
  }
}

MumfordDivisor MumfordGroup::identity() const {
  const auto& F = C_.field();
  return {FqPoly::constant(F, F->one()), FqPoly(F)};
}

MumfordDivisor MumfordGroup::neg(const Element& a) const { return {a.u, (-a.v) % a.u}; }

bool MumfordGroup::contains(const Element& a) const {
  if (!a.u.is_monic() || a.u.degree() > static_cast<int>(genus())) return false;
  if (a.v.degree() >= a.u.degree()) return false;
  return ((a.v * a.v - C_.f()) % a.u).is_zero();
}

MumfordDivisor MumfordGroup::from_point(FieldElem x, FieldElem y) const {
  const auto& F = C_.field();
  if (C_.f().eval(x) != F->sqr(y)) fail(ErrorCode::kInvalidArgument, "point is not on the curve");
  return {FqPoly::linear_root(F, x), FqPoly::constant(F, y)};
}

MumfordDivisor MumfordGroup::compose(const Element& a, const Element& b) const {
  // d1 = e1 u1 + e2 u2;  d = c1 d1 + c2 (v1 + v2)
  FqXgcd g1 = xgcd(a.u, b.u);
  FqXgcd g2 = xgcd(g1.g, a.v + b.v);
  const FqPoly& d = g2.g;
  FqPoly s1 = g2.s * g1.s;
  FqPoly s2 = g2.s * g1.t;
  const FqPoly& s3 = g2.t;
  FqPoly u = (a.u * b.u) / (d * d);
  FqPoly v = (s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + C_.f())) / d;
  v = v % u;
  return {u, v};
}

MumfordDivisor MumfordGroup::reduce(Element D) const {
  const int g = static_cast<int>(genus());
  while (D.u.degree() > g) {
    FqPoly u2 = (C_.f() - D.v * D.v) / D.u;
    D.u = u2.monic();
    D.v = (-D.v) % D.u;
  }
  D.u = D.u.monic();
  D.v = D.v % D.u;
  return D;
}

MumfordDivisor MumfordGroup::add(const Element& a, const Element& b) const { return reduce(compose(a, b)); }

MumfordDivisor MumfordGroup::random_element(std::mt19937_64& rng) const {
  const FiniteField& F = *C_.field();
  Element acc = identity();
  for (unsigned i = 0; i < genus(); ++i) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
      FieldElem x = F.element(rng() % F.order());
      auto r = F.sqrt(C_.f().eval(x));
      if (!r) continue;
      FieldElem y = (rng() & 1) ? *r : F.neg(*r);
      acc = add(acc, from_point(x, y));
      break;
    }
  }
  return acc;
}

MumfordDivisor cantor_add(const MumfordGroup& group, const MumfordDivisor& a, const MumfordDivisor& b) {
  if (!group.contains(a) || !group.contains(b)) fail(ErrorCode::kInvariantViolation, "input is not a reduced Mumford divisor");
  return group.add(a, b);
}

std::string MumfordGroup::format(const Element& d) const {
  auto list = [&](const FqPoly& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? ", " : "") + p.F().format(p.coeffs()[i]);
    return s + "]";
  };
  return "(u = " + list(d.u) + ", v = " + list(d.v) + ")";
}

}  // namespace brsieve
