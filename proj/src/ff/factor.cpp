#include "ff/factor.hpp"

#include <algorithm>
#include <map>

#include "ff/modular.hpp"

namespace brsieve {
namespace {

constexpr unsigned kTrialLimit = 1'000'000;
constexpr unsigned kRhoMaxRestarts = 64;
constexpr unsigned long kRhoMaxIterations = 1ul << 26;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = static_cast<unsigned long>(i) * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
BigInt rho(const BigInt& n, unsigned long c) {
  BigInt y = 2, x, q = 1, g = 1, ys;
  unsigned long r = 1;
  const unsigned long m = 128;
  unsigned long iterations = 0;
  auto step = [&](BigInt& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        step(y);
        BigInt diff = x - y;
        q = q * abs(diff);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      g = gcd(q, n);
      k += m;
      iterations += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1 && iterations < kRhoMaxIterations);
  if (g == n) {
    do {
      step(ys);
      g = gcd(abs(BigInt(x - ys)), n);
    } while (g == 1);
  }
  if (g == 1 || g == n) return 0;
  return g;
}

void split_composite(const BigInt& n, std::map<BigInt, unsigned>& out, BigInt& cofactor) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  for (unsigned long c = 1; c <= kRhoMaxRestarts; ++c) {
    BigInt d = rho(n, c);
    if (d != 0) {
      split_composite(d, out, cofactor);
      split_composite(BigInt(n / d), out, cofactor);
      return;
    }
  }
  cofactor *= n;
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return modular::is_prime(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

BigInt Factorization::value() const {
  BigInt v = cofactor;
  for (const auto& [p, e] : factors) v *= ipow(p, e);
  return v;
}

std::vector<BigInt> Factorization::primes() const {
  std::vector<BigInt> out;
  for (const auto& [p, e] : factors) out.push_back(p);
  return out;
}

Factorization factor_integer(const BigInt& n) {
  if (n <= 0) fail(ErrorCode::kInvalidArgument, "factor_integer: N must be positive, got " + n.get_str());
  std::map<BigInt, unsigned> found;
  BigInt rest = n;
  for (unsigned p : small_primes()) {
    BigInt bp = p;
    if (bp * bp > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      found[bp] += 1;
    }
  }
  Factorization f;
  if (rest > 1) {
    if (rest <= BigInt(kTrialLimit) * kTrialLimit || is_probable_prime(rest)) {
      found[rest] += 1;
    } else {
      split_composite(rest, found, f.cofactor);
    }
  }
  for (const auto& [p, e] : found) f.factors.emplace_back(p, e);
  return f;
}

BigInt radical(const BigInt& n) {
  Factorization f = factor_integer(n);
  if (!f.complete()) fail(ErrorCode::kBudgetExceeded, "radical: factorization incomplete for " + n.get_str());
  BigInt r = 1;
  for (const auto& [p, e] : f.factors) r *= p;
  return r;
}

bool is_smooth(const BigInt& n, const BigInt& bound) {
  if (n <= 0) fail(ErrorCode::kInvalidArgument, "is_smooth: N must be positive");
  BigInt rest = n;
  // trial division by primes up to the bound settles small bounds without a full factorization
  if (bound <= kTrialLimit) {
    for (unsigned p : small_primes()) {
      if (BigInt(p) > bound) break;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= p;
      if (rest == 1) return true;
    }
    return rest == 1;
  }
  Factorization f = factor_integer(n);
  if (!f.complete()) fail(ErrorCode::kBudgetExceeded, "is_smooth: factorization incomplete for " + n.get_str());
  return f.factors.empty() || f.factors.back().first <= bound;
}

std::pair<unsigned, BigInt> split_valuation(const BigInt& n, const BigInt& ell) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "split_valuation: zero has infinite valuation");
  unsigned r = 0;
  BigInt m = n;
  while (divisible(m, ell)) {
    m /= ell;
    ++r;
  }
  return {r, m};
}

BigInt primary_part(const BigInt& n, const BigInt& d) {
  if (d == 0) fail(ErrorCode::kInvalidArgument, "primary_part: d must be nonzero");
  BigInt part = 1, rest = abs(n);
  for (BigInt g = gcd(rest, d); g > 1; g = gcd(rest, d)) {
    while (divisible(rest, g)) {
      rest /= g;
      part *= g;
    }
  }
  return part;
}

}  // namespace brsieve
