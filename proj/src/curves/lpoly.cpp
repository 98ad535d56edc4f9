#include "curves/lpoly.hpp"

#include <sstream>

#include "ff/factor.hpp"

namespace brsieve {

BigInt LPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& a : coeffs) s += a;
  return s;
}

ZPoly LPolynomial::frobenius_charpoly() const {
  std::vector<BigInt> c(coeffs.rbegin(), coeffs.rend());
  return ZPoly(std::move(c));
}

std::vector<BigInt> LPolynomial::power_sums(unsigned count) const {
  // Newton: k a_k + sum_{i=1}^{k} s_i a_{k-i} = 0, with a_k = 0 beyond 2g.
  auto a = [&](unsigned i) { return i < coeffs.size() ? coeffs[i] : BigInt(0); };
  std::vector<BigInt> s(count + 1, 0);
  for (unsigned k = 1; k <= count; ++k) {
    BigInt acc = -BigInt(k) * a(k);
    for (unsigned i = 1; i < k; ++i) acc -= s[i] * a(k - i);
    s[k] = acc;
  }
  s.erase(s.begin());
  return s;
}

BigInt LPolynomial::predicted_count(unsigned n) const {
  return ipow(q, n) + 1 - power_sums(n).back();
}

void LPolynomial::validate() const {
  auto violation = [&](const std::string& what) {
    fail(ErrorCode::kInvariantViolation, "L-polynomial " + format() + ": " + what);
  };
  if (coeffs.size() != 2 * genus + 1) violation("wrong number of coefficients");
  if (coeffs[0] != 1) violation("a_0 != 1");
  for (unsigned i = 0; i <= genus; ++i) {
    if (coeffs[2 * genus - i] != ipow(q, genus - i) * coeffs[i]) violation("functional equation fails at i = " + std::to_string(i));
  }
  auto s = power_sums(2 * genus);
  const BigInt g2 = BigInt(genus) * genus;
  for (unsigned n = 1; n <= 2 * genus; ++n) {
    if (s[n - 1] * s[n - 1] > 4 * g2 * ipow(q, n)) violation("power sum s_" + std::to_string(n) + " exceeds the Weil bound");
  }
}

std::string LPolynomial::format() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < coeffs.size(); ++i) os << (i ? ", " : "") << coeffs[i].get_str();
  os << ']';
  return os.str();
}

LPolynomial lpolynomial_from_counts(const BigInt& q, unsigned genus, std::span<const BigInt> counts) {
  if (genus == 0) fail(ErrorCode::kInvalidArgument, "genus must be positive");
  if (counts.size() < genus) fail(ErrorCode::kInvalidArgument, "need N_1..N_g to determine L");
  std::vector<BigInt> s(genus + 1, 0);
  for (unsigned k = 1; k <= genus; ++k) s[k] = ipow(q, k) + 1 - counts[k - 1];
  LPolynomial L;
  L.q = q;
  L.genus = genus;
  L.coeffs.assign(2 * genus + 1, 0);
  L.coeffs[0] = 1;
  for (unsigned k = 1; k <= genus; ++k) {
    BigInt acc = 0;
    for (unsigned i = 1; i <= k; ++i) acc += s[i] * L.coeffs[k - i];
    if (!divisible(acc, BigInt(k))) fail(ErrorCode::kInvariantViolation, "point counts are not consistent with any L-polynomial");
    L.coeffs[k] = -acc / k;
  }
  for (unsigned i = 0; i < genus; ++i) L.coeffs[2 * genus - i] = ipow(q, genus - i) * L.coeffs[i];
  L.validate();
  for (unsigned n = genus + 1; n <= counts.size(); ++n) {
    if (L.predicted_count(n) != counts[n - 1]) {
      fail(ErrorCode::kInvariantViolation, "N_" + std::to_string(n) + " disagrees with the L-polynomial");
    }
  }
  return L;
}

LPolynomial lpolynomial(const FqHyperelliptic& curve, std::uint64_t budget) {
  std::vector<BigInt> counts;
  for (unsigned n = 1; n <= curve.genus(); ++n) counts.push_back(big(count_points_ext(curve, n, budget)));
  return lpolynomial_from_counts(big(curve.field()->order()), curve.genus(), counts);
}

LPolynomial lpolynomial(const FqElliptic& curve, std::uint64_t budget) {
  return lpolynomial(curve.to_hyperelliptic(), budget);
}

BigInt jacobian_order(const LPolynomial& L, unsigned n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "extension degree must be positive");
  std::vector<BigInt> xn(n + 1, 0);
  xn[0] = -1;
  xn[n] = 1;
  BigInt r = resultant(L.frobenius_charpoly(), ZPoly(std::move(xn)));
  return abs(r);
}

std::vector<ValuationRow> ell_valuation_sequence(const LPolynomial& L, const BigInt& ell, unsigned n_max) {
  if (ell < 2 || !is_probable_prime(ell)) fail(ErrorCode::kInvalidArgument, "ell must be prime");
  std::vector<ValuationRow> rows;
  for (unsigned n = 1; n <= n_max; ++n) {
    ValuationRow row;
    row.n = n;
    row.order = jacobian_order(L, n);
    auto [r, m] = split_valuation(row.order, ell);
    row.r = r;
    row.m = m;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool weil_guarantee(unsigned genus, const BigInt& q) {
  if (genus == 0) fail(ErrorCode::kInvalidArgument, "genus must be positive");
  BigInt lhs = (q + 1) * (q + 1);
  BigInt rhs = 4 * BigInt(genus) * genus * q;
  return lhs > rhs;
}

bool is_ordinary(const FqElliptic& curve) {
  const FiniteField& F = *curve.field();
  if (!F.is_prime_field()) fail(ErrorCode::kInvalidArgument, "is_ordinary expects a prime base field");
  if (F.characteristic() < 3) fail(ErrorCode::kUnsupported, "is_ordinary needs p >= 3");
  const BigInt p = big(F.characteristic());
  BigInt a = p + 1 - big(count_points(curve));
  return !divisible(a, p);
}

}  // namespace brsieve
