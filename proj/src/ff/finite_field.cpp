#include "ff/finite_field.hpp"

#include <algorithm>
#include <array>
#include <list>
#include <map>
#include <mutex>
#include <sstream>

#include "ff/factor.hpp"
#include "ff/modular.hpp"
#include "ff/poly.hpp"

namespace brsieve {
namespace {

using u64 = std::uint64_t;

// Small fields are shared: they are rebuilt constantly by scans. Larger
// tabled fields go through a short LRU so that a place's extensions are
// built once without pinning hundreds of megabytes.
constexpr u64 kCacheLimit = u64{1} << 16;
constexpr size_t kLargeCacheSlots = 6;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<u64, unsigned>, FieldPtr>& cache() {
  static std::map<std::pair<u64, unsigned>, FieldPtr> c;
  return c;
}

std::list<std::pair<std::pair<u64, unsigned>, FieldPtr>>& large_cache() {
  static std::list<std::pair<std::pair<u64, unsigned>, FieldPtr>> c;
  return c;
}

std::optional<u64> checked_power(u64 p, unsigned n) {
  u64 q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > (u64{1} << 63) / p) return std::nullopt;
    q *= p;
  }
  if (q >= (u64{1} << 63)) return std::nullopt;
  return q;
}

// Lexicographically smallest monic irreducible of degree n over F_p, where
// coefficient vectors (c_0, ..., c_{n-1}) are compared with c_0 most significant.
std::vector<u64> smallest_irreducible(const FieldPtr& fp, unsigned n) {
  const u64 p = fp->characteristic();
  const u64 count = *checked_power(p, n);
  std::vector<FieldElem> c(n + 1);
  c[n] = fp->one();
  for (u64 k = 0; k < count; ++k) {
    // k's base-p digits, most significant first, are c_0, c_1, ..., c_{n-1}
    u64 rest = k;
    for (unsigned j = 0; j < n; ++j) {
      c[n - 1 - j] = FieldElem(rest % p);
      rest /= p;
    }
    if (n > 1 && c[0] == fp->zero()) continue;  // divisible by x
    FqPoly candidate(fp, c);
    if (is_irreducible(candidate)) {
      std::vector<u64> out(n + 1);
      for (unsigned j = 0; j <= n; ++j) out[j] = c[j].packed();
      return out;
    }
  }
  fail(ErrorCode::kInternal, "no irreducible polynomial found (impossible)");
}

}  // namespace

FieldPtr FiniteField::prime(u64 p) {
  if (!modular::is_prime(p)) fail(ErrorCode::kInvalidArgument, "not a prime: " + std::to_string(p));
  if (p >= (u64{1} << 63)) fail(ErrorCode::kInvalidArgument, "characteristic must be below 2^63");
  return extension(p, 1);
}

FieldPtr FiniteField::extension(u64 p, unsigned n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "extension degree must be at least 1");
  if (!modular::is_prime(p)) fail(ErrorCode::kInvalidArgument, "not a prime: " + std::to_string(p));
  auto q = checked_power(p, n);
  if (!q) fail(ErrorCode::kInvalidArgument, "field order p^n must be below 2^63");
  const bool cacheable = *q <= kCacheLimit;
  const bool lru = !cacheable && *q <= kTableLimit;
  if (cacheable) {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find({p, n});
    if (it != cache().end()) return it->second;
  } else if (lru) {
    std::lock_guard lock(cache_mutex());
    auto& lc = large_cache();
    for (auto it = lc.begin(); it != lc.end(); ++it) {
      if (it->first == std::pair{p, n}) {
        lc.splice(lc.begin(), lc, it);
        return lc.front().second;
      }
    }
  }
  FieldPtr field;
  if (n == 1) {
    field = std::make_shared<const FiniteField>(p, 1, std::vector<u64>{0, 1}, false);
  } else {
    auto fp = extension(p, 1);
    field = std::make_shared<const FiniteField>(p, n, smallest_irreducible(fp, n), true);
  }
  if (cacheable) {
    std::lock_guard lock(cache_mutex());
    cache().emplace(std::pair{p, n}, field);
  } else if (lru) {
    std::lock_guard lock(cache_mutex());
    auto& lc = large_cache();
    lc.emplace_front(std::pair{p, n}, field);
    if (lc.size() > kLargeCacheSlots) lc.pop_back();
  }
  return field;
}

FiniteField::FiniteField(u64 p, unsigned n, std::vector<u64> modulus, bool build)
    : p_(p), n_(n), q_(*checked_power(p, n)), modulus_(std::move(modulus)) {
  if (build && n_ > 1 && q_ <= kTableLimit) build_tables();
}

void FiniteField::unpack(u64 rep, u64* digits) const {
  for (unsigned i = 0; i < n_; ++i) {
    digits[i] = rep % p_;
    rep /= p_;
  }
}

u64 FiniteField::pack(const u64* digits) const {
  u64 r = 0;
  for (unsigned i = n_; i-- > 0;) r = r * p_ + digits[i];
  return r;
}

FieldElem FiniteField::from_int(std::int64_t v) const {
  // p < 2^63, so it fits in a signed 64-bit value
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return FieldElem(static_cast<u64>(r));
}

FieldElem FiniteField::from_bigint(const BigInt& v) const { return FieldElem(mod_u64(v, p_)); }

FieldElem FiniteField::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > n_) fail(ErrorCode::kInvalidArgument, "too many coefficients for " + describe());
  std::array<u64, kMaxDigits> d{};
  for (size_t i = 0; i < coeffs.size(); ++i) d[i] = from_int(coeffs[i]).packed();
  return FieldElem(pack(d.data()));
}

FieldElem FiniteField::element(u64 index) const {
  if (index >= q_) fail(ErrorCode::kInvalidArgument, "element index out of range");
  return FieldElem(index);
}

std::vector<u64> FiniteField::coeffs(FieldElem a) const {
  std::vector<u64> d(n_);
  unpack(a.packed(), d.data());
  return d;
}

FieldElem FiniteField::add(FieldElem a, FieldElem b) const {
  if (n_ == 1) return FieldElem(modular::add(a.packed(), b.packed(), p_));
  u64 x = a.packed(), y = b.packed(), r = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    u64 s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    r += s * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return FieldElem(r);
}

FieldElem FiniteField::neg(FieldElem a) const {
  if (n_ == 1) return FieldElem(a.packed() == 0 ? 0 : p_ - a.packed());
  u64 x = a.packed(), r = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    u64 d = x % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    x /= p_;
    scale *= p_;
  }
  return FieldElem(r);
}

FieldElem FiniteField::sub(FieldElem a, FieldElem b) const {
  if (n_ == 1) return FieldElem(modular::sub(a.packed(), b.packed(), p_));
  return add(a, neg(b));
}

FieldElem FiniteField::mul_poly(FieldElem a, FieldElem b) const {
  std::array<u64, kMaxDigits> x{}, y{};
  std::array<u64, 2 * kMaxDigits> t{};
  unpack(a.packed(), x.data());
  unpack(b.packed(), y.data());
  for (unsigned i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) t[i + j] = modular::add(t[i + j], modular::mul(x[i], y[j], p_), p_);
  }
  for (unsigned k = 2 * n_ - 2; k >= n_; --k) {
    const u64 c = t[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      t[k - n_ + j] = modular::sub(t[k - n_ + j], modular::mul(c, modulus_[j], p_), p_);
    }
    t[k] = 0;
  }
  return FieldElem(pack(t.data()));
}

FieldElem FiniteField::mul(FieldElem a, FieldElem b) const {
  if (n_ == 1) return FieldElem(modular::mul(a.packed(), b.packed(), p_));
  if (a.packed() == 0 || b.packed() == 0) return zero();
  if (has_log_tables()) {
    u64 s = u64{log_[a.packed()]} + log_[b.packed()];
    if (s >= q_ - 1) s -= q_ - 1;
    return FieldElem(exp_[s]);
  }
  return mul_poly(a, b);
}

FieldElem FiniteField::pow_poly(FieldElem a, u64 e) const {
  FieldElem r = one();
  while (e) {
    if (e & 1) r = mul_poly(r, a);
    a = mul_poly(a, a);
    e >>= 1;
  }
  return r;
}

FieldElem FiniteField::pow(FieldElem a, u64 e) const {
  if (n_ == 1) return FieldElem(modular::pow(a.packed(), e, p_));
  if (a.packed() == 0) return e == 0 ? one() : zero();
  if (has_log_tables()) {
    const u64 order = q_ - 1;
    u64 l = static_cast<u64>(static_cast<unsigned __int128>(log_[a.packed()]) * (e % order) % order);
    return FieldElem(exp_[l]);
  }
  return pow_poly(a, e);
}

FieldElem FiniteField::pow(FieldElem a, const BigInt& e) const {
  if (sgn(e) < 0) return pow(inv(a), BigInt(-e));
  if (a.packed() == 0) return e == 0 ? one() : zero();
  // a^(q-1) = 1 for a != 0
  return pow(a, mod_u64(e, q_ - 1));
}

FieldElem FiniteField::inv(FieldElem a) const {
  if (a.packed() == 0) fail(ErrorCode::kInvalidArgument, "division by zero in " + describe());
  if (n_ == 1) return FieldElem(modular::inverse(a.packed(), p_));
  if (has_log_tables()) {
    u64 l = log_[a.packed()];
    return FieldElem(exp_[l == 0 ? 0 : q_ - 1 - l]);
  }
  return pow_poly(a, q_ - 2);
}

bool FiniteField::is_square(FieldElem a) const {
  if (p_ == 2) fail(ErrorCode::kUnsupported, "is_square: characteristic 2 is not supported");
  if (a.packed() == 0) return true;
  if (has_log_tables()) return (log_[a.packed()] & 1u) == 0;
  return pow(a, (q_ - 1) / 2) == one();
}

FieldElem FiniteField::sqrt_generic(FieldElem a) const {
  // Tonelli-Shanks over F_q
  u64 t = q_ - 1;
  unsigned s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  FieldElem z = zero();
  for (u64 i = 2; i < q_; ++i) {
    if (!is_square(FieldElem(i))) {
      z = FieldElem(i);
      break;
    }
  }
  unsigned m = s;
  FieldElem c = pow(z, t);
  FieldElem tt = pow(a, t);
  FieldElem r = pow(a, (t + 1) / 2);
  while (tt != one()) {
    unsigned i = 0;
    for (FieldElem x = tt; x != one(); x = sqr(x)) ++i;
    FieldElem b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = sqr(b);
    m = i;
    c = sqr(b);
    tt = mul(tt, c);
    r = mul(r, b);
  }
  return r;
}

std::optional<FieldElem> FiniteField::sqrt(FieldElem a) const {
  if (!is_square(a)) return std::nullopt;
  if (a.packed() == 0) return zero();
  FieldElem r;
  if (n_ == 1) {
    r = FieldElem(modular::sqrt_mod(a.packed(), p_));
  } else if (has_log_tables()) {
    r = FieldElem(exp_[log_[a.packed()] / 2]);
  } else {
    r = sqrt_generic(a);
  }
  FieldElem other = neg(r);
  return std::min(r, other);
}

FieldElem FiniteField::frobenius(FieldElem a, unsigned k) const {
  k %= n_;
  if (k == 0) return a;
  return pow(a, *checked_power(p_, k));
}

FieldElem FiniteField::generator() const {
  if (!has_log_tables()) fail(ErrorCode::kUnsupported, "generator: field has no log tables");
  return FieldElem(generator_);
}

void FiniteField::build_tables() {
  const u64 order = q_ - 1;
  Factorization f = factor_integer(big(order));
  u64 g = 0;
  for (u64 cand = 2; cand < q_ && g == 0; ++cand) {
    bool primitive = true;
    for (const auto& [r, e] : f.factors) {
      if (pow_poly(FieldElem(cand), order / to_u64(r)) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) g = cand;
  }
  // Step x -> g*x on digit vectors. Tabled extensions have p < 2^12, so all
  // intermediate sums fit in 32 bits and the divisions stay cheap.
  using u32 = std::uint32_t;
  const u32 p = static_cast<u32>(p_);
  std::array<u32, kMaxDigits> gd{}, x{}, mod{};
  std::array<u32, 2 * kMaxDigits> t{};
  for (unsigned j = 0; j < n_; ++j) mod[j] = static_cast<u32>(modulus_[j]);
  {
    u64 rest = g;
    for (unsigned j = 0; j < n_; ++j, rest /= p_) gd[j] = static_cast<u32>(rest % p_);
  }
  x[0] = 1;
  exp_.resize(order);
  log_.assign(q_, 0);
  for (u64 i = 0; i < order; ++i) {
    u32 packed = 0;
    for (unsigned j = n_; j-- > 0;) packed = packed * p + x[j];
    exp_[i] = packed;
    log_[packed] = static_cast<u32>(i);
    std::fill(t.begin(), t.begin() + 2 * n_, 0);
    for (unsigned a = 0; a < n_; ++a) {
      if (x[a] == 0) continue;
      for (unsigned b = 0; b < n_; ++b) t[a + b] += x[a] * gd[b];
    }
    for (unsigned k = 2 * n_ - 2; k >= n_; --k) {
      const u32 c = t[k] % p;
      if (c == 0) continue;
      for (unsigned j = 0; j < n_; ++j) t[k - n_ + j] += (p - c) * mod[j];
    }
    for (unsigned j = 0; j < n_; ++j) x[j] = t[j] % p;
  }
  // zech_[i] = log(1 + g^i); adding 1 only touches the lowest digit.
  zech_.resize(order);
  for (u64 i = 0; i < order; ++i) {
    u64 e = exp_[i];
    e = (e % p_ == p_ - 1) ? e - (p_ - 1) : e + 1;
    zech_[i] = e == 0 ? static_cast<std::uint32_t>(order) : log_[e];
  }
  generator_ = g;
}

std::string FiniteField::format(FieldElem a) const {
  if (n_ == 1) return std::to_string(a.packed());
  auto d = coeffs(a);
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < n_; ++i) os << (i ? ", " : "") << d[i];
  os << ']';
  return os.str();
}

std::string FiniteField::describe() const {
  if (n_ == 1) return "F(" + std::to_string(p_) + ")";
  return "F(" + std::to_string(p_) + "," + std::to_string(n_) + ")";
}

FieldEmbedding::FieldEmbedding(FieldPtr small, FieldPtr large)
    : small_(std::move(small)), large_(std::move(large)) {
  if (small_->characteristic() != large_->characteristic() || large_->degree() % small_->degree() != 0) {
    fail(ErrorCode::kInvalidArgument, "cannot embed " + small_->describe() + " into " + large_->describe());
  }
  const unsigned k = small_->degree();
  FieldElem theta = large_->zero();
  if (k > 1) {
    std::vector<FieldElem> m;
    for (auto c : small_->modulus()) m.push_back(large_->from_int(static_cast<std::int64_t>(c)));
    auto rs = roots(FqPoly(large_, m));
    if (rs.empty()) fail(ErrorCode::kInternal, "subfield modulus has no root in the larger field");
    theta = rs.front();  // roots() is sorted by packed representative
  }
  FieldElem power = large_->one();
  for (unsigned i = 0; i < k; ++i) {
    basis_images_.push_back(power);
    power = large_->mul(power, theta);
  }
}

FieldElem FieldEmbedding::operator()(FieldElem a) const {
  if (small_->degree() == 1) return FieldElem(a.packed());
  auto d = small_->coeffs(a);
  FieldElem r = large_->zero();
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) r = large_->add(r, large_->mul(large_->from_int(static_cast<std::int64_t>(d[i])), basis_images_[i]));
  }
  return r;
}

}  // namespace brsieve
