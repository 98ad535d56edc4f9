#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ff/bigint.hpp"

namespace brsieve {

// An element of F_{p^n}, stored as its packed representative
// sum c_i p^i (c_i in [0, p)), i.e. the coefficient vector of the
// polynomial-basis representation read as base-p digits. Elements do not
// carry their field; every operation goes through the owning FiniteField.
// The packed integer order is the canonical element order used for all
// "smallest element" choices.
class FieldElem {
 public:
  constexpr FieldElem() = default;
  constexpr explicit FieldElem(std::uint64_t packed) : rep_(packed) {}

  constexpr std::uint64_t packed() const { return rep_; }

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

 private:
  std::uint64_t rep_ = 0;
};

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

// F_p (degree 1, modulus x) or F_{p^n} = F_p[t]/(m(t)) with m the
// lexicographically smallest monic irreducible of degree n. Immutable after
// construction; safe to share across threads.
class FiniteField {
 public:
  using u64 = std::uint64_t;

  static FieldPtr prime(u64 p);
  static FieldPtr extension(u64 p, unsigned n);

  u64 characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  u64 order() const { return q_; }
  bool is_prime_field() const { return n_ == 1; }
  const std::vector<u64>& modulus() const { return modulus_; }
  bool has_log_tables() const { return !exp_.empty(); }

  FieldElem zero() const { return FieldElem(0); }
  FieldElem one() const { return FieldElem(1); }
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_bigint(const BigInt& v) const;
  FieldElem from_coeffs(std::span<const std::int64_t> coeffs) const;
  FieldElem element(u64 index) const;
  std::vector<u64> coeffs(FieldElem a) const;
  bool in_prime_subfield(FieldElem a) const { return a.packed() < p_; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem sqr(FieldElem a) const { return mul(a, a); }
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, u64 e) const;
  FieldElem pow(FieldElem a, const BigInt& e) const;

  // Euler criterion a^{(q-1)/2} in {0, 1}; odd characteristic only.
  bool is_square(FieldElem a) const;
  // Square root with the smaller packed representative, if one exists.
  std::optional<FieldElem> sqrt(FieldElem a) const;
  // a^{p^k}
  FieldElem frobenius(FieldElem a, unsigned k = 1) const;

  // Discrete log / antilog w.r.t. the table generator (tables only).
  std::uint32_t log_of(FieldElem a) const { return log_[a.packed()]; }
  FieldElem exp_of(u64 i) const { return FieldElem(exp_[i]); }
  FieldElem generator() const;
  // Zech logarithm log(1 + g^i); returns order() - 1 when 1 + g^i = 0.
  std::uint32_t zech_of(u64 i) const { return zech_[i]; }

  // "3" for prime fields, "[c0, c1, ...]" otherwise.
  std::string format(FieldElem a) const;
  std::string describe() const;

  FiniteField(u64 p, unsigned n, std::vector<u64> modulus, bool build_tables);

 private:
  static constexpr unsigned kMaxDigits = 64;
  static constexpr u64 kTableLimit = u64{1} << 23;

  void unpack(u64 rep, u64* digits) const;
  u64 pack(const u64* digits) const;
  FieldElem mul_poly(FieldElem a, FieldElem b) const;
  FieldElem pow_poly(FieldElem a, u64 e) const;
  FieldElem sqrt_generic(FieldElem a) const;
  void build_tables();

  u64 p_;
  unsigned n_;
  u64 q_;
  std::vector<u64> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i packed, i < q-1
  std::vector<std::uint32_t> log_;  // log_[packed]; log_[0] unused
  std::vector<std::uint32_t> zech_;
  u64 generator_ = 0;
};

// Subfield embedding F_{p^k} -> F_{p^n}, k | n, sending the generator of the
// smaller polynomial basis to the root of its modulus with the smallest
// packed representative.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr small, FieldPtr large);

  FieldElem operator()(FieldElem a) const;
  const FieldPtr& source() const { return small_; }
  const FieldPtr& target() const { return large_; }

 private:
  FieldPtr small_;
  FieldPtr large_;
  std::vector<FieldElem> basis_images_;
};

}  // namespace brsieve
