#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "search/place_search.hpp"

using namespace brsieve;
using oracle::i64;

namespace {

const EllipticModel kE67{{0, 1, 1, -12, -21}};
const std::array<i64, 5> kA67 = {0, 1, 1, -12, -21};

}  // namespace

TEST_CASE("place scan matches enumeration on 67.a1") {
  auto rows = ecount_scan(kE67, 2, 80);
  std::vector<i64> primes = oracle::primes_upto(80);
  REQUIRE(rows.size() == primes.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(rows[i].v);
    CHECK(rows[i].v == static_cast<std::uint64_t>(primes[i]));
    if (rows[i].v == 2 || rows[i].v == 67) {
      if (rows[i].v == 67) CHECK_FALSE(rows[i].good);
      if (!rows[i].good) CHECK_FALSE(rows[i].note.empty());
      continue;
    }
    REQUIRE(rows[i].good);
    CHECK(rows[i].count == static_cast<std::uint64_t>(oracle::count_elliptic(kA67, primes[i], 1)));
  }
  auto parallel = ecount_scan(kE67, 2, 80, 3);
  REQUIRE(parallel.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) CHECK(parallel[i].count == rows[i].count);
}

TEST_CASE("torsion bound from five places") {
  // counts 6, 4, 10, 16, 12 by enumeration
  CHECK(torsion_bound(kE67, {3, 5, 7, 11, 13}) == 2);
  CHECK(torsion_bound(kE67, {3, 7}) == 2);
  CHECK(torsion_bound(kE67, {5, 17}) == 1);
  CHECK_THROWS_AS(torsion_bound(kE67, {67}), Error);
}

TEST_CASE("coprime chain on 67.a1") {
  ChainState st = coprime_chain(kE67, 17, 10'000, 5);
  REQUIRE(st.target_reached);
  REQUIRE(st.chain.size() >= 5);
  CHECK(verify_chain(kE67, st).empty());
  for (size_t i = 0; i < st.chain.size(); ++i) {
    const i64 v = static_cast<i64>(st.chain[i].v);
    const i64 n = oracle::count_elliptic(kA67, v, 1);
    CHECK(st.chain[i].order == BigInt(static_cast<long>(n)));
    CHECK(oracle::legendre(17, v) == -1);                              // 17 inert at v
    CHECK(std::gcd(n, i64{17}) == 1);
    CHECK(static_cast<double>((v + 1 - n) * (v + 1 - n)) <= 4.0 * v);  // Hasse
    for (size_t j = 0; j < i; ++j) CHECK(std::gcd(n, st.chain[j].order.get_si()) == 1);
  }
  ChainState threaded = coprime_chain(kE67, 17, 10'000, 5, 3);
  REQUIRE(threaded.chain.size() == st.chain.size());
  for (size_t i = 0; i < st.chain.size(); ++i) CHECK(threaded.chain[i].v == st.chain[i].v);
}

TEST_CASE("verification catches a tampered chain") {
  ChainState st = coprime_chain(kE67, 17, 10'000, 5);
  REQUIRE(st.chain.size() >= 2);
  ChainState bad = st;
  bad.chain[1].order += 1;
  CHECK_FALSE(verify_chain(kE67, bad).empty());
  ChainState dup = st;
  dup.chain.push_back(dup.chain[0]);
  CHECK_FALSE(verify_chain(kE67, dup).empty());
}
