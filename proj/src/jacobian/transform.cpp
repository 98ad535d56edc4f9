#include "jacobian/transform.hpp"

namespace brsieve {

OddDegreeModel odd_degree_transform(const FqHyperelliptic& curve, FieldElem root) {
  if (curve.odd_degree()) fail(ErrorCode::kInvalidArgument, "odd_degree_transform expects an even-degree model");
  const FqPoly& f = curve.f();
  if (f.eval(root) != f.F().zero()) fail(ErrorCode::kInvalidArgument, "supplied value is not a root of f");
  // f(r + s) = sum b_i s^i with b_0 = 0; reversing b_1..b_{2g+2} gives the new model.
  FqPoly b = f.shifted(root);
  const int top = f.degree();
  std::vector<FieldElem> c(static_cast<size_t>(top), f.F().zero());
  for (int i = 1; i <= top; ++i) c[static_cast<size_t>(top - i)] = b[static_cast<size_t>(i)];
  return {curve, FqHyperelliptic(FqPoly(curve.field(), std::move(c))), root};
}

OddDegreeModel odd_degree_transform(const FqHyperelliptic& curve) {
  auto rs = roots(curve.f());
  if (rs.empty()) fail(ErrorCode::kInvalidArgument, "f has no root in " + curve.field()->describe());
  return odd_degree_transform(curve, rs.front());
}

std::optional<std::pair<FieldElem, FieldElem>> OddDegreeModel::map_point(FieldElem x, FieldElem y) const {
  const FiniteField& F = *source.field();
  if (x == root) return std::nullopt;
  FieldElem t = F.inv(F.sub(x, root));
  FieldElem Y = F.mul(y, F.pow(t, static_cast<std::uint64_t>(source.genus() + 1)));
  return std::make_pair(t, Y);
}

}  // namespace brsieve
