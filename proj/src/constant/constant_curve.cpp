#include "constant/constant_curve.hpp"

#include <numeric>

#include "ff/factor.hpp"
#include "jacobian/group.hpp"
#include "jacobian/mumford.hpp"
#include "jacobian/transform.hpp"

namespace brsieve {
namespace {

using u64 = std::uint64_t;

void check_enumeration(u64 q, unsigned n, u64 budget) {
  u64 Q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (Q > budget / q) {
      fail(ErrorCode::kBudgetExceeded, "point search over F_" + std::to_string(q) + "^" + std::to_string(n) +
                                           " exceeds budget " + std::to_string(budget));
    }
    Q *= q;
  }
}

// Affine points of y^2 = f(x) over the coefficient field, ordered by (x, y).
template <class Fn>
void for_each_affine_point(const FqPoly& f, Fn&& fn) {
  const FiniteField& F = f.F();
  for (u64 i = 0; i < F.order(); ++i) {
    const FieldElem x(i);
    auto r = F.sqrt(f.eval(x));
    if (!r) continue;
    const FieldElem y0 = *r;
    const FieldElem y1 = F.neg(y0);
    if (!fn(x, std::min(y0, y1))) return;
    if (y0 != y1 && !fn(x, std::max(y0, y1))) return;
  }
}

void search_model(const FqHyperelliptic& model, PointSearchResult& res) {
  const MumfordGroup J(model);
  const auto [r, m] = split_valuation(res.jacobian_order, res.ell);
  (void)r;
  res.infinity_witness = true;
  for_each_affine_point(model.f(), [&](FieldElem x, FieldElem y) {
    ++res.points_tested;
    const MumfordDivisor D = J.from_point(x, y);
    if (!prime_to_ell_test(J, D, res.jacobian_order, res.ell)) return true;
    PointWitness w;
    w.x = x;
    w.y = y;
    w.order = element_order(J, D, factor_integer(m));
    w.divisor = J.format(D);
    res.witness = w;
    return false;
  });
  res.scan_complete = !res.witness.has_value();
}

bool factorial_divisible(unsigned n, unsigned m) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return divisible(f, big(m));
}

// Repeated squaring on field multiplication only, so the brute force does
// not lean on the identity it is meant to confirm.
FieldElem naive_pow(const FiniteField& F, FieldElem a, u64 e) {
  FieldElem r = F.one();
  while (e) {
    if (e & 1) r = F.mul(r, a);
    a = F.mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace

ThresholdScan threshold_scan(const LPolynomial& L, const BigInt& ell, unsigned n_max) {
  if (L.genus < 2) fail(ErrorCode::kInvalidArgument, "threshold scan needs genus > 1");
  ThresholdScan out;
  out.q = L.q;
  out.genus = L.genus;
  out.ell = ell;
  out.L = L;
  BigInt qn = 1;
  for (const auto& v : ell_valuation_sequence(L, ell, n_max)) {
    qn *= L.q;
    ThresholdRow row;
    row.n = v.n;
    row.r = v.r;
    row.order = v.order;
    row.lhs = qn;
    BigInt base = 2 * BigInt(L.genus);
    for (unsigned i = 0; i < v.r; ++i) base *= ell;
    row.rhs = base * base;
    row.holds = row.lhs > row.rhs;
    if (row.holds && !out.first) out.first = row.n;
    out.rows.push_back(std::move(row));
  }
  return out;
}

ThresholdScan threshold_scan(const FqHyperelliptic& C, const BigInt& ell, unsigned n_max, u64 budget) {
  return threshold_scan(lpolynomial(C, budget), ell, n_max);
}

PointSearchResult prime_to_ell_point_search(const FqHyperelliptic& C, const BigInt& ell, unsigned n, u64 budget) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "extension degree must be positive");
  if (ell < 2 || !is_probable_prime(ell)) fail(ErrorCode::kInvalidArgument, "ell must be prime");
  if (!C.odd_degree()) {
    fail(ErrorCode::kUnsupported, "point search needs an odd-degree model; use the transformed search for even degree");
  }
  check_enumeration(C.field()->order(), n, budget);
  PointSearchResult res;
  res.ell = ell;
  res.n = n;
  res.requested_n = n;
  res.jacobian_order = jacobian_order(lpolynomial(C, budget), n);
  const FqHyperelliptic model = base_change(C, n);
  res.field = model.field();
  res.model = "odd-degree";
  search_model(model, res);
  return res;
}

PointSearchResult prime_to_ell_point_search_any(const FqHyperelliptic& C, const BigInt& ell, unsigned n, u64 budget) {
  if (C.odd_degree()) return prime_to_ell_point_search(C, ell, n, budget);
  if (n == 0) fail(ErrorCode::kInvalidArgument, "extension degree must be positive");
  if (ell < 2 || !is_probable_prime(ell)) fail(ErrorCode::kInvalidArgument, "ell must be prime");
  const unsigned k = smallest_root_degree(C.f());
  const unsigned work = std::lcm(n, k);
  check_enumeration(C.field()->order(), work, budget);
  PointSearchResult res;
  res.ell = ell;
  res.n = work;
  res.requested_n = n;
  res.jacobian_order = jacobian_order(lpolynomial(C, budget), work);
  const OddDegreeModel t = odd_degree_transform(base_change(C, work));
  res.field = t.target.field();
  res.model = "transformed at x = " + res.field->format(t.root) + " over " + res.field->describe();
  search_model(t.target, res);
  if (res.witness && res.witness->x != res.field->zero()) {
    // (t, Y) -> (r + 1/t, Y / t^{g+1})
    const FiniteField& F = *res.field;
    const FieldElem inv_t = F.inv(res.witness->x);
    res.witness->source_point = std::make_pair(
        F.add(t.root, inv_t), F.mul(res.witness->y, F.pow(inv_t, static_cast<u64>(C.genus() + 1))));
  }
  return res;
}

DmReport dm_affine_check(unsigned m, unsigned brute_force_max) {
  if (m == 0) fail(ErrorCode::kInvalidArgument, "m must be positive");
  if (m > 39) fail(ErrorCode::kInvalidArgument, "3^m must stay below 2^63");
  DmReport rep;
  rep.m = m;
  rep.field_order = 1;
  for (unsigned i = 0; i < m; ++i) rep.field_order *= 3;
  rep.algebraic = 0;
  rep.certificate = "x^(3^m) = x for every x in F_(3^m), so the left side equals (1)(-1) = -1 != 1";
  rep.note = "affine model only; points at infinity of a smooth projective model are not examined";
  if (m <= brute_force_max) {
    auto F = FiniteField::extension(3, m);
    const u64 Q = F->order();
    std::vector<FieldElem> a(Q), b(Q);
    for (u64 i = 0; i < Q; ++i) {
      const FieldElem x(i);
      const FieldElem fx = F->sub(naive_pow(*F, x, Q), x);
      a[i] = F->add(fx, F->one());
      b[i] = F->sub(fx, F->one());
    }
    u64 count = 0;
    for (u64 i = 0; i < Q; ++i) {
      for (u64 j = 0; j < Q; ++j) count += F->mul(a[i], b[j]) == F->one();
    }
    rep.brute_force = count;
    rep.agree = count == rep.algebraic;
  }
  return rep;
}

FqElliptic cubic_to_weierstrass(const FqPoly& cubic) {
  if (cubic.degree() != 3) fail(ErrorCode::kInvalidArgument, "expected a cubic");
  const FieldPtr& K = cubic.field();
  const FiniteField& F = *K;
  const FieldElem d = cubic[0], a = cubic[1], b = cubic[2], c = cubic[3];
  return FqElliptic(K, {F.zero(), b, F.zero(), F.mul(a, c), F.mul(d, F.sqr(c))});
}

BrellReport brell_factor_report(unsigned quotient_n_max, unsigned threshold_n_max) {
  auto F3 = FiniteField::prime(3);
  const ZPoly c0 = ZPoly::from_ints({-1, 0, 1, 0, 0, 0, -1});
  const ZPoly ss = ZPoly::from_ints({-1, 1, 0, -1});
  const ZPoly ord = ZPoly::from_ints({-1, 0, 1, -1});
  BrellReport rep;
  const FqHyperelliptic C0(c0.reduce(F3));
  rep.L_C0 = lpolynomial(C0);
  rep.L_ss = lpolynomial(FqHyperelliptic(ss.reduce(F3)));
  rep.L_ord = lpolynomial(FqHyperelliptic(ord.reduce(F3)));
  rep.product = ZPoly(rep.L_ss.coeffs) * ZPoly(rep.L_ord.coeffs);
  rep.identity_holds = rep.product == ZPoly(rep.L_C0.coeffs);
  rep.ss_ordinary = is_ordinary(cubic_to_weierstrass(ss.reduce(F3)));
  rep.ord_ordinary = is_ordinary(cubic_to_weierstrass(ord.reduce(F3)));
  rep.c0_points = count_points(C0);

  for (unsigned n = 1; n <= quotient_n_max; ++n) {
    auto K = FiniteField::extension(3, n);
    const FiniteField& F = *K;
    const FqPoly f = c0.reduce(K), fss = ss.reduce(K), ford = ord.reduce(K);
    QuotientRow row;
    row.n = n;
    for_each_affine_point(f, [&](FieldElem x, FieldElem y) {
      ++row.affine_points;
      const FieldElem y2 = F.sqr(y);
      if (fss.eval(F.sqr(x)) == y2) ++row.to_ss;
      if (x == F.zero()) {
        ++row.ord_skipped;
      } else {
        const FieldElem u = F.inv(F.sqr(x));
        const FieldElem w = F.div(y, F.pow(x, u64{3}));
        if (ford.eval(u) == F.sqr(w)) ++row.to_ord;
      }
      return true;
    });
    row.ok = row.to_ss == row.affine_points && row.to_ord + row.ord_skipped == row.affine_points;
    rep.quotient_rows.push_back(row);
  }
  for (const auto& r : threshold_scan(rep.L_C0, 2, threshold_n_max).rows) {
    if (!r.holds) rep.threshold_excluded.push_back(r.n);
  }
  return rep;
}

FrobeniusReport frobenius_iteration_check(const FieldPtr& field, u64 q, const std::vector<std::vector<FieldElem>>& points,
                                          unsigned n_max) {
  const FiniteField& F = *field;
  const u64 p = F.characteristic();
  unsigned s = 0;
  for (u64 t = q; t > 1; t /= p) {
    if (t % p != 0) fail(ErrorCode::kInvalidArgument, "q must be a power of the characteristic");
    ++s;
  }
  if (s == 0 || F.degree() % s != 0) fail(ErrorCode::kInvalidArgument, "F_q is not a subfield of " + F.describe());
  if (n_max == 0) fail(ErrorCode::kInvalidArgument, "n_max must be positive");
  FrobeniusReport rep;
  rep.field = field;
  rep.q = q;
  rep.n_max = n_max;
  rep.consistent = true;
  const BigInt group = big(F.order() - 1);
  unsigned worst = 1;
  for (const auto& coords : points) {
    FrobeniusPointRow row;
    row.coords = coords;
    // orbit length under x -> x^q
    std::vector<FieldElem> cur = coords;
    do {
      for (auto& c : cur) c = F.pow(c, q);
      ++row.degree;
    } while (cur != coords);
    while (!factorial_divisible(row.first_n, row.degree)) ++row.first_n;
    if (row.first_n == 0) row.first_n = 1;
    BigInt fact = 1;
    row.consistent = true;
    for (unsigned n = 1; n <= n_max; ++n) {
      fact *= n;
      // q^{n!} reduced modulo |F^*|
      BigInt e;
      mpz_powm(e.get_mpz_t(), BigInt(big(q)).get_mpz_t(), fact.get_mpz_t(), group.get_mpz_t());
      if (e == 0) e = group;
      bool fixed = true;
      for (auto c : coords) fixed = fixed && F.pow(c, e) == c;
      row.fixed.push_back(fixed);
      row.consistent = row.consistent && fixed == divisible(fact, big(row.degree));
    }
    rep.consistent = rep.consistent && row.consistent;
    worst = std::max(worst, row.first_n);
    rep.points.push_back(std::move(row));
  }
  rep.first_all = worst <= n_max ? worst : 0;
  return rep;
}

}  // namespace brsieve
