#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <utility>

#include "ff/factor.hpp"

namespace brsieve {

// Minimal interface shared by the explicit group implementations.
template <class G>
concept FiniteGroupLaw = requires(const G& g, const typename G::Element& a, std::mt19937_64& rng) {
  { g.identity() } -> std::convertible_to<typename G::Element>;
  { g.add(a, a) } -> std::convertible_to<typename G::Element>;
  { g.neg(a) } -> std::convertible_to<typename G::Element>;
  { g.random_element(rng) } -> std::convertible_to<typename G::Element>;
  { a == a } -> std::convertible_to<bool>;
};

template <FiniteGroupLaw G>
typename G::Element scalar_mul(const G& group, const BigInt& m, const typename G::Element& x) {
  using E = typename G::Element;
  BigInt k = m;
  E base = x;
  if (k < 0) {
    k = -k;
    base = group.neg(base);
  }
  E acc = group.identity();
  const size_t bits = k == 0 ? 0 : mpz_sizeinbase(k.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    acc = group.add(acc, acc);
    if (mpz_tstbit(k.get_mpz_t(), i)) acc = group.add(acc, base);
  }
  return acc;
}

template <FiniteGroupLaw G>
bool is_identity(const G& group, const typename G::Element& x) {
  return x == group.identity();
}

// Exact order of x given a factored multiple N of it.
template <FiniteGroupLaw G>
BigInt element_order(const G& group, const typename G::Element& x, const Factorization& N) {
  if (!N.complete()) fail(ErrorCode::kInvalidArgument, "element_order needs a complete factorization");
  BigInt order = N.value();
  if (!is_identity(group, scalar_mul(group, order, x))) {
    fail(ErrorCode::kInvariantViolation, "N * x is not the identity; wrong ambient order " + order.get_str());
  }
  for (const auto& [p, e] : N.factors) {
    for (unsigned i = 0; i < e; ++i) {
      BigInt trial = order / p;
      if (!is_identity(group, scalar_mul(group, trial, x))) break;
      order = trial;
    }
  }
  return order;
}

// Splitting of a group of order N into its d-primary part and the rest.
struct AmbientGroupInfo {
  BigInt N;
  Factorization factorization;
  BigInt d;
  BigInt N_d;      // largest divisor of N supported on primes of d
  BigInt N_perp;   // N / N_d
  BigInt e;        // idempotent: 1 mod N_d, 0 mod N_perp
  BigInt e_perp;   // 1 - e mod N
};

AmbientGroupInfo make_ambient_info(const BigInt& N, const BigInt& d);

template <FiniteGroupLaw G>
std::pair<typename G::Element, typename G::Element> split_projection(const G& group, const typename G::Element& x,
                                                                     const AmbientGroupInfo& info) {
  return {scalar_mul(group, info.e, x), scalar_mul(group, info.e_perp, x)};
}

// True iff the order of x is prime to ell; N must annihilate x.
template <FiniteGroupLaw G>
bool prime_to_ell_test(const G& group, const typename G::Element& x, const BigInt& N, const BigInt& ell) {
  if (!is_identity(group, scalar_mul(group, N, x))) fail(ErrorCode::kInvariantViolation, "N * x is not the identity");
  auto [r, m] = split_valuation(N, ell);
  (void)r;
  return is_identity(group, scalar_mul(group, m, x));
}

// Z/n written additively; used as a reference group in tests and examples.
class CyclicGroup {
 public:
  using Element = std::uint64_t;

  explicit CyclicGroup(std::uint64_t n);
  std::uint64_t order() const { return n_; }
  Element identity() const { return 0; }
  Element add(Element a, Element b) const;
  Element neg(Element a) const { return a == 0 ? 0 : n_ - a; }
  Element random_element(std::mt19937_64& rng) const { return rng() % n_; }
  Element generator() const { return 1 % n_; }

 private:
  std::uint64_t n_;
};

}  // namespace brsieve
