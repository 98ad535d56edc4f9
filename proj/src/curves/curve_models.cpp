#include "curves/curve_models.hpp"

#include "ff/modular.hpp"

namespace brsieve {
namespace {

using u64 = std::uint64_t;

void require_odd_characteristic(const FiniteField& F, const char* what) {
  if (F.characteristic() == 2) fail(ErrorCode::kUnsupported, std::string(what) + ": characteristic 2 is not supported");
}

int solutions_for_value(const FiniteField& F, FieldElem v) {
  if (v == F.zero()) return 1;
  return F.is_square(v) ? 2 : 0;
}

u64 count_affine_prime_field(const FqPoly& f) {
  const FiniteField& F = f.F();
  const u64 p = F.characteristic();
  std::vector<bool> square(p, false);
  for (u64 y = 1; y <= p / 2; ++y) square[modular::mul(y, y, p)] = true;
  std::vector<u64> c;
  for (auto e : f.coeffs()) c.push_back(e.packed());
  u64 total = 0;
  const bool small = p < (u64{1} << 32);
  for (u64 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (size_t i = c.size(); i-- > 0;) {
      acc = small ? (acc * x + c[i]) % p : modular::add(modular::mul(acc, x, p), c[i], p);
    }
    total += acc == 0 ? 1 : (square[acc] ? 2 : 0);
  }
  return total;
}

// One evaluation per orbit of x -> x^q, using the log representation:
// log(x^q) = q * log(x) mod (Q - 1). Horner runs entirely on logs, with
// Zech logarithms for the additions; m stands for log(0).
u64 count_affine_tables(const FqPoly& f, u64 q) {
  const FiniteField& F = f.F();
  const u64 Q = F.order();
  const u64 m = Q - 1;
  const u64 qm = q % m;
  std::vector<u64> lc;
  for (auto c : f.coeffs()) lc.push_back(c == F.zero() ? m : F.log_of(c));
  const auto solutions = [&](u64 lx) -> u64 {
    u64 acc = lc.back();
    for (size_t k = lc.size() - 1; k-- > 0;) {
      if (acc != m) {
        acc += lx;
        if (acc >= m) acc -= m;
      }
      const u64 c = lc[k];
      if (c == m) continue;
      if (acc == m) {
        acc = c;
        continue;
      }
      const u64 z = F.zech_of(c >= acc ? c - acc : c + m - acc);
      if (z == m) {
        acc = m;
      } else {
        acc += z;
        if (acc >= m) acc -= m;
      }
    }
    return acc == m ? 1 : ((acc & 1) == 0 ? 2 : 0);
  };
  u64 total = static_cast<u64>(solutions_for_value(F, f.eval(F.zero())));
  for (u64 i = 0; i < m; ++i) {
    u64 len = 1;
    bool representative = true;
    if (qm != 1 && q != Q) {
      for (u64 j = (i * qm) % m; j != i; j = (j * qm) % m) {
        if (j < i) {
          representative = false;
          break;
        }
        ++len;
      }
    }
    if (!representative) continue;
    total += len * solutions(i);
  }
  return total;
}

u64 count_affine_generic(const FqPoly& f) {
  const FiniteField& F = f.F();
  u64 total = 0;
  for (u64 i = 0; i < F.order(); ++i) total += static_cast<u64>(solutions_for_value(F, f.eval(FieldElem(i))));
  return total;
}

u64 points_at_infinity(const FqHyperelliptic& c, const FiniteField& F, FieldElem lead) {
  if (c.odd_degree()) return 1;
  return F.is_square(lead) ? 2 : 0;
}

void check_budget(u64 q, unsigned n, u64 budget) {
  u64 Q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (Q > budget / q) {
      fail(ErrorCode::kBudgetExceeded, "point count over F_" + std::to_string(q) + "^" + std::to_string(n) +
                                           " exceeds budget " + std::to_string(budget));
    }
    Q *= q;
  }
}

}  // namespace

void HyperellipticModel::validate() const {
  if (f.degree() < 3) fail(ErrorCode::kInvalidArgument, "hyperelliptic model needs deg f >= 3");
  if (discriminant(f) == 0) fail(ErrorCode::kInvalidArgument, "f is not squarefree");
}

BigInt EllipticModel::discriminant() const {
  const auto& [a1, a2, a3, a4, a6] = a;
  BigInt b2 = a1 * a1 + 4 * a2;
  BigInt b4 = 2 * a4 + a1 * a3;
  BigInt b6 = a3 * a3 + 4 * a6;
  BigInt b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return BigInt(-b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6);
}

void EllipticModel::validate() const {
  if (discriminant() == 0) fail(ErrorCode::kInvalidArgument, "elliptic model is singular");
}

FqHyperelliptic::FqHyperelliptic(FqPoly f) : f_(std::move(f)) {
  require_odd_characteristic(f_.F(), "hyperelliptic curve");
  if (f_.degree() < 3) fail(ErrorCode::kInvalidArgument, "hyperelliptic model needs deg f >= 3");
  if (!is_squarefree(f_)) fail(ErrorCode::kInvalidArgument, "singular model: f is not squarefree");
}

FieldElem elliptic_discriminant(const FiniteField& F, const std::array<FieldElem, 5>& a) {
  auto k = [&](std::int64_t v) { return F.from_int(v); };
  auto mul = [&](FieldElem x, FieldElem y) { return F.mul(x, y); };
  auto add = [&](FieldElem x, FieldElem y) { return F.add(x, y); };
  auto sub = [&](FieldElem x, FieldElem y) { return F.sub(x, y); };
  const auto& [a1, a2, a3, a4, a6] = a;
  FieldElem b2 = add(mul(a1, a1), mul(k(4), a2));
  FieldElem b4 = add(mul(k(2), a4), mul(a1, a3));
  FieldElem b6 = add(mul(a3, a3), mul(k(4), a6));
  FieldElem b8 = sub(add(add(mul(mul(a1, a1), a6), mul(k(4), mul(a2, a6))), mul(a2, mul(a3, a3))),
                     add(mul(a1, mul(a3, a4)), mul(a4, a4)));
  FieldElem d = F.neg(mul(mul(b2, b2), b8));
  d = sub(d, mul(k(8), mul(b4, mul(b4, b4))));
  d = sub(d, mul(k(27), mul(b6, b6)));
  d = add(d, mul(k(9), mul(b2, mul(b4, b6))));
  return d;
}

FqElliptic::FqElliptic(FieldPtr field, std::array<FieldElem, 5> a) : field_(std::move(field)), a_(a) {
  if (elliptic_discriminant(*field_, a_) == field_->zero()) fail(ErrorCode::kInvalidArgument, "singular elliptic model");
}

FieldElem FqElliptic::discriminant() const { return elliptic_discriminant(*field_, a_); }

FqHyperelliptic FqElliptic::to_hyperelliptic() const {
  const FiniteField& F = *field_;
  require_odd_characteristic(F, "elliptic curve");
  const auto& [a1, a2, a3, a4, a6] = a_;
  FieldElem b2 = F.add(F.mul(a1, a1), F.mul(F.from_int(4), a2));
  FieldElem b4 = F.add(F.mul(F.from_int(2), a4), F.mul(a1, a3));
  FieldElem b6 = F.add(F.mul(a3, a3), F.mul(F.from_int(4), a6));
  FieldElem i2 = F.inv(F.from_int(2));
  FieldElem i4 = F.inv(F.from_int(4));
  return FqHyperelliptic(FqPoly(field_, {F.mul(b6, i4), F.mul(b4, i2), F.mul(b2, i4), F.one()}));
}

FqElliptic FqElliptic::base_change(const FieldPtr& larger) const {
  FieldEmbedding emb(field_, larger);
  std::array<FieldElem, 5> b;
  for (size_t i = 0; i < 5; ++i) b[i] = emb(a_[i]);
  return FqElliptic(larger, b);
}

ReductionInfo<FqHyperelliptic> good_reduction(const HyperellipticModel& model, std::uint64_t v) {
  if (v < 2 || !modular::is_prime(v)) fail(ErrorCode::kInvalidArgument, "place must be a prime, got " + std::to_string(v));
  ReductionInfo<FqHyperelliptic> info;
  info.place = v;
  if (v == 2) {
    info.reason = "residue characteristic 2";
    return info;
  }
  if (divisible(model.f.lead(), big(v))) {
    info.reason = "leading coefficient vanishes";
    return info;
  }
  FqPoly fv = model.f.reduce(FiniteField::prime(v));
  if (!is_squarefree(fv)) {
    info.reason = "reduction is not squarefree";
    return info;
  }
  info.good = true;
  info.curve.emplace(std::move(fv));
  return info;
}

ReductionInfo<FqElliptic> good_reduction(const EllipticModel& model, std::uint64_t v) {
  if (v < 2 || !modular::is_prime(v)) fail(ErrorCode::kInvalidArgument, "place must be a prime, got " + std::to_string(v));
  ReductionInfo<FqElliptic> info;
  info.place = v;
  if (divisible(model.discriminant(), big(v))) {
    info.reason = "place divides the discriminant";
    return info;
  }
  auto F = FiniteField::prime(v);
  std::array<FieldElem, 5> a;
  for (size_t i = 0; i < 5; ++i) a[i] = F->from_bigint(model.a[i]);
  info.good = true;
  info.curve.emplace(F, a);
  return info;
}

std::uint64_t count_affine_solutions(const FqPoly& f, std::uint64_t subfield_order) {
  const FiniteField& F = f.F();
  require_odd_characteristic(F, "point count");
  if (F.is_prime_field()) return count_affine_prime_field(f);
  if (F.has_log_tables()) return count_affine_tables(f, subfield_order);
  return count_affine_generic(f);
}

FqHyperelliptic base_change(const FqHyperelliptic& curve, unsigned n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "extension degree must be positive");
  if (n == 1) return curve;
  const FiniteField& F = *curve.field();
  auto large = FiniteField::extension(F.characteristic(), F.degree() * n);
  FieldEmbedding emb(curve.field(), large);
  std::vector<FieldElem> c;
  for (auto e : curve.f().coeffs()) c.push_back(emb(e));
  return FqHyperelliptic(FqPoly(large, std::move(c)));
}

std::uint64_t count_points(const FqHyperelliptic& curve) { return count_points_ext(curve, 1); }

std::uint64_t count_points_ext(const FqHyperelliptic& curve, unsigned n, std::uint64_t budget) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "extension degree must be positive");
  const u64 q = curve.field()->order();
  check_budget(q, n, budget);
  FqHyperelliptic big_curve = base_change(curve, n);
  const FiniteField& F = *big_curve.field();
  return count_affine_solutions(big_curve.f(), q) + points_at_infinity(big_curve, F, big_curve.f().lead());
}

std::uint64_t count_points(const FqElliptic& curve) { return count_points_ext(curve, 1); }

std::uint64_t count_points_ext(const FqElliptic& curve, unsigned n, std::uint64_t budget) {
  return count_points_ext(curve.to_hyperelliptic(), n, budget);
}

}  // namespace brsieve
