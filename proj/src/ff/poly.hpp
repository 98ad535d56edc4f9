#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ff/bigint.hpp"
#include "ff/finite_field.hpp"

namespace brsieve {

// Degree of the zero polynomial.
inline constexpr int kDegreeNegInf = -1;

// Dense polynomial over a finite field, ascending coefficients, no trailing zeros.
class FqPoly {
 public:
  explicit FqPoly(FieldPtr field) : field_(std::move(field)) {}
  FqPoly(FieldPtr field, std::vector<FieldElem> coeffs);

  static FqPoly constant(FieldPtr field, FieldElem c);
  static FqPoly x(FieldPtr field);
  static FqPoly monomial(FieldPtr field, FieldElem c, unsigned degree);
  // Monic linear x - r.
  static FqPoly linear_root(FieldPtr field, FieldElem r);

  const FieldPtr& field() const { return field_; }
  const FiniteField& F() const { return *field_; }
  const std::vector<FieldElem>& coeffs() const { return c_; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == field_->one(); }
  FieldElem lead() const { return c_.empty() ? field_->zero() : c_.back(); }
  FieldElem operator[](size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_->one(); }

  FqPoly monic() const;
  FqPoly scaled(FieldElem s) const;
  FieldElem eval(FieldElem x) const;
  FqPoly derivative() const;
  // f(x + r)
  FqPoly shifted(FieldElem r) const;

  FqPoly operator-() const;
  friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator/(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator%(const FqPoly& a, const FqPoly& b);
  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }

  static std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);

  std::string format() const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<FieldElem> c_;
};

struct FqXgcd {
  FqPoly g;  // monic gcd (zero iff both inputs are zero)
  FqPoly s;
  FqPoly t;  // g = s*a + t*b
};

FqPoly gcd(const FqPoly& a, const FqPoly& b);
FqXgcd xgcd(const FqPoly& a, const FqPoly& b);
FqPoly powmod(const FqPoly& base, const BigInt& e, const FqPoly& mod);

// gcd(f, f') == 1; false when f' vanishes identically.
bool is_squarefree(const FqPoly& f);
bool is_irreducible(const FqPoly& f);

// Root detection: exhaustive for q <= 10^6, gcd(f, x^q - x) otherwise.
bool has_linear_factor(const FqPoly& f);
bool has_linear_factor_exhaustive(const FqPoly& f);
bool has_linear_factor_gcd(const FqPoly& f);

// Distinct roots in the coefficient field, sorted by packed representative.
std::vector<FieldElem> roots(const FqPoly& f);

// Smallest k >= 1 such that f has a root in F_{q^k} (degree of its smallest
// irreducible factor); f nonconstant.
unsigned smallest_root_degree(const FqPoly& f);

// Dense polynomial with integer coefficients.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<BigInt> coeffs);
  static ZPoly from_ints(std::initializer_list<long> coeffs);
  static ZPoly x();
  static ZPoly constant(const BigInt& c);

  const std::vector<BigInt>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& lead() const;
  BigInt operator[](size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  BigInt eval(const BigInt& x) const;
  BigRat eval(const BigRat& x) const;
  ZPoly derivative() const;
  BigInt content() const;
  ZPoly primitive_part() const;
  ZPoly scaled(const BigInt& s) const;
  // x^deg * f(1/x)
  ZPoly reversed() const;
  FqPoly reduce(const FieldPtr& field) const;

  ZPoly operator-() const;
  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  // "7*x^6 + 14*x^4 - 1"
  std::string format() const;
  // "[c0, c1, ...]"
  std::string format_list() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Exact quotient a / b over Q; throws unless the quotient is integral and exact.
ZPoly exact_quotient(const ZPoly& a, const ZPoly& b);

// Resultant via fraction-free (Bareiss) elimination on the Sylvester matrix.
BigInt resultant(const ZPoly& a, const ZPoly& b);
BigInt discriminant(const ZPoly& f);

// Rational roots (sorted), via the rational root test.
std::vector<BigRat> rational_roots(const ZPoly& f);

// Number of distinct real roots, by a Sturm sequence over Q.
unsigned count_real_roots(const ZPoly& f);

}  // namespace brsieve
