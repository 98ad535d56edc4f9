#include <random>

#include "constant/constant_curve.hpp"
#include "curves/curve_models.hpp"
#include "curves/lpoly.hpp"
#include "doctest.h"
#include "ff/modular.hpp"
#include "io/curve_spec.hpp"
#include "oracle.hpp"

using namespace brsieve;
using oracle::i64;

namespace {

const std::string kCurves = std::string(BRSIEVE_SOURCE_ROOT) + "/curves/";

const std::vector<i64> kIndex2 = {14, 14, 7, 0, 14, 0, 7};
const std::vector<i64> kC0 = {-1, 0, 1, 0, 0, 0, -1};

HyperellipticModel model(const std::vector<i64>& f) {
  std::vector<BigInt> c;
  for (auto x : f) c.emplace_back(static_cast<long>(x));
  return {ZPoly(c)};
}

FqHyperelliptic over(const std::vector<i64>& f, const FieldPtr& F) {
  std::vector<FieldElem> c;
  for (auto x : f) c.push_back(F->from_int(x));
  return FqHyperelliptic(FqPoly(F, c));
}

BigInt Z(i64 v) { return BigInt(static_cast<long>(v)); }

std::vector<i64> coeffs(const LPolynomial& L) {
  std::vector<i64> out;
  for (const auto& c : L.coeffs) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST_CASE("counts over F_v and F_{v^2} match enumeration for the index-2 curve") {
  const HyperellipticModel C = model(kIndex2);
  for (std::uint64_t v : {3ull, 5ull, 11ull, 13ull, 17ull, 19ull}) {
    CAPTURE(v);
    auto red = good_reduction(C, v);
    REQUIRE(red.good);
    CHECK(count_points(*red.curve) == static_cast<std::uint64_t>(oracle::count_hyperelliptic(kIndex2, v, 1)));
    CHECK(count_points_ext(*red.curve, 2) == static_cast<std::uint64_t>(oracle::count_hyperelliptic(kIndex2, v, 2)));
  }
}

TEST_CASE("index-2 curve: L-polynomials and Jacobian orders") {
  const HyperellipticModel C = model(kIndex2);
  // reference values from the enumeration oracle: N_1 = 16 and N_2 = 320 at v = 17
  struct Row {
    std::uint64_t v;
    std::vector<i64> L;
    i64 order;
  };
  const std::vector<Row> rows = {
      {3, {1, 0, -1, 0, 9}, 9}, {5, {1, 0, -1, 0, 25}, 25}, {17, {1, -2, 17, -34, 289}, 271}};
  for (const auto& r : rows) {
    auto red = good_reduction(C, r.v);
    REQUIRE(red.good);
    LPolynomial L = lpolynomial(*red.curve);
    const std::vector<i64> counts = {oracle::count_hyperelliptic(kIndex2, r.v, 1),
                                     oracle::count_hyperelliptic(kIndex2, r.v, 2)};
    CHECK(coeffs(L) == oracle::lpoly_from_counts(r.v, 2, counts));
    CHECK(coeffs(L) == r.L);
    CHECK(jacobian_order(L, 1) == Z(r.order));
    CHECK(L.at_one() == Z(r.order));
  }
}

TEST_CASE("bad places carry a reason") {
  const HyperellipticModel C = model(kIndex2);
  auto at2 = good_reduction(C, 2);
  CHECK_FALSE(at2.good);
  CHECK_FALSE(at2.reason.empty());
  auto at7 = good_reduction(C, 7);
  CHECK_FALSE(at7.good);
  CHECK(at7.reason.find("leading") != std::string::npos);
  EllipticModel E{{0, 1, 1, -12, -21}};
  CHECK(E.discriminant() == -67);
  CHECK_FALSE(good_reduction(E, 67).good);
  CHECK(good_reduction(E, 3).good);
}

TEST_CASE("elliptic counts match enumeration") {
  EllipticModel E{{0, 1, 1, -12, -21}};
  for (auto v : oracle::primes_upto(60)) {
    if (v == 2 || v == 67) continue;
    auto red = good_reduction(E, v);
    REQUIRE(red.good);
    CHECK(count_points(*red.curve) == static_cast<std::uint64_t>(oracle::count_elliptic({0, 1, 1, -12, -21}, v, 1)));
  }
  auto F3 = FiniteField::prime(3);
  FqElliptic ef3(F3, {F3->zero(), F3->zero(), F3->zero(), F3->from_int(-1), F3->from_int(2)});
  CHECK(count_points(ef3) == 1);  // y^2 = x^3 - x + 2 over F_3
  for (unsigned n = 1; n <= 3; ++n) {
    CHECK(count_points_ext(ef3, n) == static_cast<std::uint64_t>(oracle::count_elliptic({0, 0, 0, -1, 2}, 3, n)));
  }
}

TEST_CASE("ordinary and supersingular factor curves over F_3") {
  auto F3 = FiniteField::prime(3);
  // y^2 = -x^3 + x - 1 and y^2 = -x^3 + x^2 - 1
  auto ess = cubic_to_weierstrass(over({-1, 1, 0, -1}, F3).f());
  auto eord = cubic_to_weierstrass(over({-1, 0, 1, -1}, F3).f());
  CHECK_FALSE(is_ordinary(ess));
  CHECK(is_ordinary(eord));
  CHECK(count_points(ess) == static_cast<std::uint64_t>(oracle::count_hyperelliptic({-1, 1, 0, -1}, 3, 1)));
  CHECK(count_points(eord) == static_cast<std::uint64_t>(oracle::count_hyperelliptic({-1, 0, 1, -1}, 3, 1)));
}

TEST_CASE("C0 over F_3: empty, with the factored L-polynomial") {
  auto F3 = FiniteField::prime(3);
  FqHyperelliptic C0 = over(kC0, F3);
  CHECK(count_points(C0) == 0);
  // oracle written independently of the L-machinery: counts over F_3 and F_9
  const std::vector<i64> counts = {oracle::count_hyperelliptic(kC0, 3, 1), oracle::count_hyperelliptic(kC0, 3, 2)};
  CHECK(counts == std::vector<i64>{0, 12});
  LPolynomial L = lpolynomial(C0);
  CHECK(coeffs(L) == oracle::lpoly_from_counts(3, 2, counts));
  CHECK(coeffs(L) == std::vector<i64>{1, -4, 9, -12, 9});  // (1 - T + 3T^2)(1 - 3T + 3T^2)
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(count_points_ext(C0, n) == static_cast<std::uint64_t>(oracle::count_hyperelliptic(kC0, 3, n)));
    CHECK(L.predicted_count(n) == Z(oracle::count_hyperelliptic(kC0, 3, n)));
    CHECK(jacobian_order(L, n) == Z(oracle::jacobian_order(coeffs(L), n)));
  }
}

TEST_CASE("functional equation and Weil bound across the curve corpus") {
  std::vector<HyperellipticModel> hyper;
  std::vector<EllipticModel> ell;
  for (const char* name : {"index2", "e67a1", "brodd", "quintic_f11"}) {
    CurveSpec s = load_curve_spec(kCurves + name + ".curve");
    if (!s.over_q()) continue;
    if (s.elliptic()) {
      ell.push_back(s.elliptic_q());
    } else {
      hyper.push_back(s.hyperelliptic_q());
    }
  }
  hyper.push_back(model({1, 1, 0, 0, 0, 1}));
  unsigned checked = 0;
  for (std::uint64_t v : modular::primes_between(3, 60)) {
    for (const auto& C : hyper) {
      auto red = good_reduction(C, v);
      if (!red.good) continue;
      LPolynomial L = lpolynomial(*red.curve);
      CHECK_NOTHROW(L.validate());
      const unsigned g = L.genus;
      BigInt qp = 1;  // v^(g - i)
      for (unsigned j = 0; j < g; ++j) qp *= v;
      for (unsigned i = 0; i <= g; ++i) {
        CHECK(L.coeffs[2 * g - i] == L.coeffs[i] * qp);
        if (i < g) qp /= v;
      }
      // |N_1 - v - 1| <= 2 g sqrt(v)
      BigInt t = BigInt(count_points(*red.curve)) - v - 1;
      CHECK(t * t <= BigInt(4 * g * g) * v);
      ++checked;
    }
    for (const auto& E : ell) {
      auto red = good_reduction(E, v);
      if (!red.good) continue;
      LPolynomial L = lpolynomial(*red.curve);
      CHECK_NOTHROW(L.validate());
      CHECK(L.coeffs[2] == BigInt(v));
      ++checked;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("extension counts follow from the L-polynomial") {
  auto F5 = FiniteField::prime(5);
  FqHyperelliptic C = over({1, 1, 0, 0, 0, 1}, F5);
  LPolynomial L = lpolynomial(C);
  for (unsigned n = 1; n <= 3; ++n) {
    CHECK(L.predicted_count(n) == Z(oracle::count_hyperelliptic({1, 1, 0, 0, 0, 1}, 5, n)));
  }
  FqHyperelliptic D = base_change(over(kC0, FiniteField::prime(3)), 2);
  CHECK(D.field()->order() == 9);
  CHECK(count_points(D) == 12);
}

TEST_CASE("valuation sequence and Weil guarantee") {
  LPolynomial L = lpolynomial(over(kC0, FiniteField::prime(3)));
  auto rows = ell_valuation_sequence(L, BigInt(2), 4);
  REQUIRE(rows.size() == 4);
  const std::vector<std::pair<unsigned, long>> expected = {{0, 3}, {0, 105}, {4, 63}, {0, 6825}};
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].r == expected[i].first);
    CHECK(rows[i].m == expected[i].second);
  }
  CHECK_FALSE(weil_guarantee(2, BigInt(3)));
  CHECK(weil_guarantee(2, BigInt(17)));   // 18^2 > 16 * 17
  CHECK_FALSE(weil_guarantee(2, BigInt(13)));  // 14^2 = 196 < 208
}
