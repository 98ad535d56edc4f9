#include <random>

#include "curves/lpoly.hpp"
#include "doctest.h"
#include "ff/factor.hpp"
#include "jacobian/elliptic_group.hpp"
#include "jacobian/group.hpp"
#include "jacobian/mumford.hpp"
#include "jacobian/structure.hpp"
#include "jacobian/transform.hpp"
#include "oracle.hpp"

using namespace brsieve;
using oracle::i64;

namespace {

FqHyperelliptic over(const std::vector<i64>& f, const FieldPtr& F) {
  std::vector<FieldElem> c;
  for (auto x : f) c.push_back(F->from_int(x));
  return FqHyperelliptic(FqPoly(F, c));
}

BigInt Z(i64 v) { return BigInt(static_cast<long>(v)); }

const std::vector<i64> kQuintic = {1, 1, 0, 0, 0, 1};  // x^5 + x + 1

template <class G>
void check_group_axioms(const G& group, unsigned triples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto O = group.identity();
  for (unsigned i = 0; i < triples; ++i) {
    auto a = group.random_element(rng), b = group.random_element(rng), c = group.random_element(rng);
    REQUIRE(group.add(group.add(a, b), c) == group.add(a, group.add(b, c)));
    REQUIRE(group.add(a, b) == group.add(b, a));
    REQUIRE(group.add(a, O) == a);
    REQUIRE(group.add(a, group.neg(a)) == O);
  }
}

}  // namespace

TEST_CASE("x^5 + x + 1 is singular over F_7 and smooth over F_11") {
  CHECK_THROWS_AS(over(kQuintic, FiniteField::prime(7)), Error);
  CHECK_NOTHROW(over(kQuintic, FiniteField::prime(11)));
}

TEST_CASE("Cantor group axioms on 1000 random triples") {
  for (std::uint64_t p : {11ull, 13ull}) {
    MumfordGroup J(over(kQuintic, FiniteField::prime(p)));
    CAPTURE(p);
    check_group_axioms(J, 1000, 10 + p);
  }
  // disc(x^5 + x + 1) = 3 * 7^2 * 23, so F_25 is fine where F_9 is not
  MumfordGroup J25(over(kQuintic, FiniteField::extension(5, 2)));
  check_group_axioms(J25, 300, 7);
}

TEST_CASE("#J equals the number of reduced Mumford pairs") {
  for (std::uint64_t p : {11ull, 13ull, 17ull}) {
    LPolynomial L = lpolynomial(over(kQuintic, FiniteField::prime(p)));
    CHECK(L.at_one() == Z(oracle::count_mumford_pairs(kQuintic, p)));
  }
  // genus 3
  const std::vector<i64> f7 = {3, 0, 1, 0, 0, 0, 0, 1};
  LPolynomial L3 = lpolynomial(over(f7, FiniteField::prime(5)));
  CHECK(L3.genus == 3);
  CHECK(L3.at_one() == Z(oracle::count_mumford_pairs(f7, 5)));
}

TEST_CASE("Lagrange: N D = 0, and orders by repeated addition") {
  MumfordGroup J(over(kQuintic, FiniteField::prime(11)));
  const BigInt N = lpolynomial(J.curve()).at_one();
  CHECK(N == 88);
  const Factorization NF = factor_integer(N);
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    auto D = J.random_element(rng);
    CHECK(J.contains(D));
    CHECK(scalar_mul(J, N, D) == J.identity());
    CHECK(element_order(J, D, NF) == Z(oracle::order_by_addition(J, D, 88)));
  }
}

TEST_CASE("Cantor composition and reduction agree with the validated entry point") {
  MumfordGroup J(over(kQuintic, FiniteField::prime(11)));
  auto F = J.curve().field();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto a = J.random_element(rng), b = J.random_element(rng);
    auto sum = cantor_add(J, a, b);
    CHECK(J.reduce(J.compose(a, b)) == sum);
    CHECK(sum.u.is_monic());
    CHECK(sum.v.degree() < sum.u.degree());
    CHECK(static_cast<unsigned>(sum.u.degree()) <= J.genus());
  }
  // [P - inf] + [P' - inf] = 0 for P' the opposite point
  for (std::uint64_t x = 0; x < 11; ++x) {
    FieldElem fx = J.curve().f().eval(F->element(x));
    auto y = F->sqrt(fx);
    if (!y) continue;
    auto P = J.from_point(F->element(x), *y);
    auto Pm = J.from_point(F->element(x), F->neg(*y));
    CHECK(J.add(P, Pm) == J.identity());
  }
  CHECK_THROWS_AS(cantor_add(J, {FqPoly::x(F), FqPoly::constant(F, F->from_int(2))}, J.identity()), Error);
}

TEST_CASE("split_projection on cyclic groups") {
  for (std::uint64_t n : {12ull, 343ull, 1008ull}) {
    CyclicGroup G(n);
    for (long d : {2L, 3L, 6L, 7L}) {
      AmbientGroupInfo info = make_ambient_info(BigInt(static_cast<unsigned long>(n)), BigInt(d));
      CHECK(info.N_d * info.N_perp == info.N);
      for (std::uint64_t x = 0; x < n; ++x) {
        auto [a, b] = split_projection(G, x, info);
        CHECK(G.add(a, b) == x);                                    // reconstruction
        CHECK(scalar_mul(G, info.N_d, a) == 0);                     // a is d-primary
        CHECK(scalar_mul(G, info.N_perp, b) == 0);                  // b is prime to d
        CHECK(split_projection(G, a, info).first == a);             // idempotent
        CHECK(split_projection(G, a, info).second == 0);
        CHECK(split_projection(G, b, info).second == b);
      }
    }
  }
}

TEST_CASE("split_projection on sampled Jacobian elements") {
  MumfordGroup J(over(kQuintic, FiniteField::prime(13)));
  const BigInt N = lpolynomial(J.curve()).at_one();
  CHECK(N == 188);
  AmbientGroupInfo info = make_ambient_info(N, BigInt(2));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto D = J.random_element(rng);
    auto [a, b] = split_projection(J, D, info);
    CHECK(J.add(a, b) == D);
    CHECK(scalar_mul(J, info.N_d, a) == J.identity());
    CHECK(scalar_mul(J, info.N_perp, b) == J.identity());
    CHECK(split_projection(J, b, info).first == J.identity());
    CHECK(prime_to_ell_test(J, b, N, BigInt(2)));
  }
}

TEST_CASE("elliptic chord-and-tangent law") {
  auto F = FiniteField::prime(13);
  // 67.a1 mod 13
  FqElliptic E(F, {F->zero(), F->one(), F->one(), F->from_int(-12), F->from_int(-21)});
  EllipticGroup G(E);
  check_group_axioms(G, 1000, 5);
  auto pts = G.points(1'000'000);
  CHECK(pts.size() == static_cast<size_t>(oracle::count_elliptic({0, 1, 1, -12, -21}, 13, 1)));
  for (const auto& P : pts) {
    CHECK(G.contains(P));
    CHECK(scalar_mul(G, BigInt(static_cast<unsigned long>(pts.size())), P) == G.identity());
  }
}

TEST_CASE("elliptic group structure matches the largest element order") {
  for (std::uint64_t p : {5ull, 7ull, 13ull, 29ull, 31ull}) {
    auto F = FiniteField::prime(p);
    FqElliptic E(F, {F->zero(), F->one(), F->one(), F->from_int(-12), F->from_int(-21)});
    EllipticGroup G(E);
    auto pts = G.points(1'000'000);
    i64 exponent = 1;
    for (const auto& P : pts) exponent = std::lcm(exponent, oracle::order_by_addition(G, P, 1000));
    EllipticStructure s = elliptic_structure(E);
    CAPTURE(p);
    CHECK(s.N == Z(static_cast<i64>(pts.size())));
    CHECK(s.n2 == Z(exponent));
    CHECK(s.n1 * s.n2 == s.N);
    CHECK(s.n2 % s.n1 == 0);
    CHECK((p - 1) % s.n1.get_ui() == 0);
    EllipticStructure sampled = elliptic_structure_sampled(E, 40, 3);
    CHECK(sampled.n2 == s.n2);
    CHECK(elliptic_sylow_exponent(E, s.N, BigInt(2)) == primary_part(s.n2, BigInt(2)));
  }
}

TEST_CASE("odd-degree transform preserves the point count") {
  auto F = FiniteField::extension(3, 6);
  auto F3 = FiniteField::prime(3);
  // C0 acquires roots over F_{3^6}
  FqHyperelliptic C0(FqPoly(F, {F->from_int(-1), F->zero(), F->one(), F->zero(), F->zero(), F->zero(), F->from_int(-1)}));
  OddDegreeModel m = odd_degree_transform(C0);
  CHECK(m.target.odd_degree());
  CHECK(m.target.genus() == 2);
  CHECK(C0.f().eval(m.root) == F->zero());
  CHECK(count_points(m.target) == count_points(C0));
  unsigned mapped = 0;
  for (std::uint64_t i = 0; i < F->order(); ++i) {
    FieldElem x = F->element(i);
    auto y = F->sqrt(C0.f().eval(x));
    if (!y) continue;
    auto img = m.map_point(x, *y);
    if (x == m.root) {
      CHECK_FALSE(img.has_value());
      continue;
    }
    REQUIRE(img.has_value());
    CHECK(F->sqr(img->second) == m.target.f().eval(img->first));
    ++mapped;
  }
  CHECK(mapped > 0);
  CHECK_THROWS_AS(odd_degree_transform(FqHyperelliptic(FqPoly(F3, {F3->from_int(-1), F3->zero(), F3->one(), F3->zero(),
                                                                    F3->zero(), F3->zero(), F3->from_int(-1)}))),
                  Error);
}
