#include "ff/poly.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "ff/factor.hpp"

namespace brsieve {
namespace {

constexpr std::uint64_t kExhaustiveRootLimit = 1'000'000;

void require_same_field(const FqPoly& a, const FqPoly& b) {
  if (a.field() != b.field() && (a.F().characteristic() != b.F().characteristic() || a.F().degree() != b.F().degree())) {
    fail(ErrorCode::kInvalidArgument, "polynomials over different fields");
  }
}

// Deterministic pseudo-random walk over field elements for root splitting.
std::uint64_t splitting_index(std::uint64_t i, std::uint64_t q) {
  std::uint64_t z = i * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return (z ^ (z >> 31)) % q;
}

void split_roots(const FqPoly& h, std::vector<FieldElem>& out) {
  const FiniteField& F = h.F();
  if (h.degree() <= 0) return;
  if (h.degree() == 1) {
    FqPoly m = h.monic();
    out.push_back(F.neg(m[0]));
    return;
  }
  const BigInt half = (big(F.order()) - 1) / 2;
  for (std::uint64_t i = 0;; ++i) {
    FieldElem a = FieldElem(splitting_index(i, F.order()));
    FqPoly base = FqPoly::x(h.field()) + FqPoly::constant(h.field(), a);
    FqPoly w = powmod(base, half, h) - FqPoly::constant(h.field(), F.one());
    FqPoly d = gcd(h, w);
    if (d.degree() > 0 && d.degree() < h.degree()) {
      split_roots(d, out);
      split_roots(h / d, out);
      return;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- FqPoly

FqPoly::FqPoly(FieldPtr field, std::vector<FieldElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == field_->zero()) c_.pop_back();
}

FqPoly FqPoly::constant(FieldPtr field, FieldElem c) {
  return FqPoly(field, std::vector<FieldElem>{c});
}

FqPoly FqPoly::x(FieldPtr field) {
  auto one = field->one();
  return FqPoly(field, {field->zero(), one});
}

FqPoly FqPoly::monomial(FieldPtr field, FieldElem c, unsigned degree) {
  std::vector<FieldElem> v(degree + 1, field->zero());
  v[degree] = c;
  return FqPoly(std::move(field), std::move(v));
}

FqPoly FqPoly::linear_root(FieldPtr field, FieldElem r) {
  auto one = field->one();
  auto nr = field->neg(r);
  return FqPoly(std::move(field), {nr, one});
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(F().inv(lead()));
}

FqPoly FqPoly::scaled(FieldElem s) const {
  std::vector<FieldElem> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = F().mul(c_[i], s);
  return FqPoly(field_, std::move(v));
}

FieldElem FqPoly::eval(FieldElem x) const {
  FieldElem acc = F().zero();
  for (size_t i = c_.size(); i-- > 0;) acc = F().add(F().mul(acc, x), c_[i]);
  return acc;
}

FqPoly FqPoly::derivative() const {
  if (c_.size() <= 1) return FqPoly(field_);
  std::vector<FieldElem> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = F().mul(c_[i], F().from_int(static_cast<std::int64_t>(i % F().characteristic())));
  return FqPoly(field_, std::move(v));
}

FqPoly FqPoly::shifted(FieldElem r) const {
  FqPoly lin(field_, {r, F().one()});
  FqPoly acc(field_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(field_, c_[i]);
  return acc;
}

FqPoly FqPoly::operator-() const {
  std::vector<FieldElem> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = F().neg(c_[i]);
  return FqPoly(field_, std::move(v));
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  require_same_field(a, b);
  const FiniteField& F = a.F();
  std::vector<FieldElem> v(std::max(a.c_.size(), b.c_.size()), F.zero());
  for (size_t i = 0; i < v.size(); ++i) v[i] = F.add(a[i], b[i]);
  return FqPoly(a.field_, std::move(v));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
  require_same_field(a, b);
  const FiniteField& F = a.F();
  std::vector<FieldElem> v(std::max(a.c_.size(), b.c_.size()), F.zero());
  for (size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a[i], b[i]);
  return FqPoly(a.field_, std::move(v));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FqPoly(a.field_);
  const FiniteField& F = a.F();
  std::vector<FieldElem> v(a.c_.size() + b.c_.size() - 1, F.zero());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == F.zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return FqPoly(a.field_, std::move(v));
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& a, const FqPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) fail(ErrorCode::kInvalidArgument, "polynomial division by zero");
  const FiniteField& F = a.F();
  if (a.degree() < b.degree()) return {FqPoly(a.field_), a};
  std::vector<FieldElem> r = a.c_;
  std::vector<FieldElem> q(a.c_.size() - b.c_.size() + 1, F.zero());
  const FieldElem inv_lead = F.inv(b.lead());
  const size_t db = b.c_.size() - 1;
  for (size_t k = r.size(); k-- > db;) {
    if (r[k] == F.zero()) continue;
    FieldElem c = F.mul(r[k], inv_lead);
    q[k - db] = c;
    for (size_t j = 0; j <= db; ++j) r[k - db + j] = F.sub(r[k - db + j], F.mul(c, b.c_[j]));
  }
  r.resize(db);
  return {FqPoly(a.field_, std::move(q)), FqPoly(a.field_, std::move(r))};
}

FqPoly operator/(const FqPoly& a, const FqPoly& b) { return FqPoly::divmod(a, b).first; }
FqPoly operator%(const FqPoly& a, const FqPoly& b) { return FqPoly::divmod(a, b).second; }

std::string FqPoly::format() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << F().format(c_[i]);
  os << ']';
  return os.str();
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FqXgcd xgcd(const FqPoly& a, const FqPoly& b) {
  const auto& field = a.field();
  FqPoly r0 = a, r1 = b;
  FqPoly s0 = FqPoly::constant(field, field->one()), s1(field);
  FqPoly t0(field), t1 = FqPoly::constant(field, field->one());
  while (!r1.is_zero()) {
    auto [q, r] = FqPoly::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FqPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    FqPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FieldElem inv = field->inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

FqPoly powmod(const FqPoly& base, const BigInt& e, const FqPoly& mod) {
  if (sgn(e) < 0) fail(ErrorCode::kInvalidArgument, "powmod: negative exponent");
  FqPoly result = FqPoly::constant(base.field(), base.F().one()) % mod;
  FqPoly b = base % mod;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
  }
  return result;
}

bool is_squarefree(const FqPoly& f) {
  if (f.is_zero()) fail(ErrorCode::kInvalidArgument, "squarefree: zero polynomial");
  if (f.degree() == 0) return true;
  FqPoly d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

bool is_irreducible(const FqPoly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const BigInt q = big(f.F().order());
  const FqPoly x = FqPoly::x(f.field());
  FqPoly h = x;
  for (int i = 1; i <= f.degree() / 2; ++i) {
    h = powmod(h, q, f);
    if (gcd(h - x, f).degree() != 0) return false;
  }
  return true;
}

bool has_linear_factor_exhaustive(const FqPoly& f) {
  if (f.is_zero()) fail(ErrorCode::kInvalidArgument, "has_linear_factor: zero polynomial");
  const FiniteField& F = f.F();
  for (std::uint64_t i = 0; i < F.order(); ++i) {
    if (f.eval(FieldElem(i)) == F.zero()) return true;
  }
  return false;
}

bool has_linear_factor_gcd(const FqPoly& f) {
  if (f.is_zero()) fail(ErrorCode::kInvalidArgument, "has_linear_factor: zero polynomial");
  if (f.degree() <= 0) return false;
  const FqPoly x = FqPoly::x(f.field());
  FqPoly xq = powmod(x, big(f.F().order()), f);
  return gcd(xq - x, f).degree() > 0;
}

bool has_linear_factor(const FqPoly& f) {
  if (f.F().order() <= kExhaustiveRootLimit) return has_linear_factor_exhaustive(f);
  return has_linear_factor_gcd(f);
}

std::vector<FieldElem> roots(const FqPoly& f) {
  if (f.is_zero()) fail(ErrorCode::kInvalidArgument, "roots: zero polynomial");
  const FiniteField& F = f.F();
  std::vector<FieldElem> out;
  if (f.degree() <= 0) return out;
  if (F.characteristic() == 2) {
    if (F.order() > kExhaustiveRootLimit) fail(ErrorCode::kUnsupported, "roots: large characteristic-2 fields");
    for (std::uint64_t i = 0; i < F.order(); ++i) {
      if (f.eval(FieldElem(i)) == F.zero()) out.push_back(FieldElem(i));
    }
    return out;
  }
  const FqPoly x = FqPoly::x(f.field());
  FqPoly m = f.monic();
  FqPoly h = gcd(powmod(x, big(F.order()), m) - x, m);
  split_roots(h, out);
  std::sort(out.begin(), out.end());
  return out;
}

unsigned smallest_root_degree(const FqPoly& f) {
  if (f.degree() <= 0) fail(ErrorCode::kInvalidArgument, "smallest_root_degree: constant polynomial");
  const BigInt q = big(f.F().order());
  const FqPoly x = FqPoly::x(f.field());
  FqPoly h = x;
  for (int k = 1; k <= f.degree(); ++k) {
    h = powmod(h, q, f);
    if (gcd(h - x, f).degree() > 0) return static_cast<unsigned>(k);
  }
  fail(ErrorCode::kInternal, "smallest_root_degree: no factor found");
}

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  for (long c : coeffs) v.emplace_back(c);
  return ZPoly(std::move(v));
}

ZPoly ZPoly::x() { return ZPoly({BigInt(0), BigInt(1)}); }
ZPoly ZPoly::constant(const BigInt& c) { return ZPoly(std::vector<BigInt>{c}); }

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& ZPoly::lead() const {
  if (c_.empty()) fail(ErrorCode::kInvalidArgument, "leading coefficient of the zero polynomial");
  return c_.back();
}

BigInt ZPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

BigRat ZPoly::eval(const BigRat& x) const {
  BigRat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + BigRat(c_[i]);
  return acc;
}

ZPoly ZPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return ZPoly(std::move(v));
}

BigInt ZPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) g = gcd(g, c);
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (c_.empty()) return {};
  BigInt g = content();
  if (lead() < 0) g = -g;
  std::vector<BigInt> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] / g;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::scaled(const BigInt& s) const {
  std::vector<BigInt> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::reversed() const {
  std::vector<BigInt> v(c_.rbegin(), c_.rend());
  return ZPoly(std::move(v));
}

FqPoly ZPoly::reduce(const FieldPtr& field) const {
  std::vector<FieldElem> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = field->from_bigint(c_[i]);
  return FqPoly(field, std::move(v));
}

ZPoly ZPoly::operator-() const { return scaled(BigInt(-1)); }

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return ZPoly(std::move(v));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return ZPoly(std::move(v));
}

std::string ZPoly::format() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string ZPoly::format_list() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << ']';
  return os.str();
}

ZPoly exact_quotient(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) fail(ErrorCode::kInvalidArgument, "exact_quotient: division by zero polynomial");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    fail(ErrorCode::kInvalidArgument, "exact_quotient: not divisible");
  }
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(r.size() - b.coeffs().size() + 1);
  const size_t db = b.coeffs().size() - 1;
  for (size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!divisible(r[k], b.lead())) fail(ErrorCode::kInvalidArgument, "exact_quotient: non-integral quotient");
    BigInt c = r[k] / b.lead();
    q[k - db] = c;
    for (size_t j = 0; j <= db; ++j) r[k - db + j] -= c * b.coeffs()[j];
  }
  for (size_t i = 0; i < db; ++i) {
    if (r[i] != 0) fail(ErrorCode::kInvalidArgument, "exact_quotient: nonzero remainder");
  }
  return ZPoly(std::move(q));
}

BigInt resultant(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (m == 0) return ipow(a.lead(), static_cast<unsigned long>(n));
  if (n == 0) return ipow(b.lead(), static_cast<unsigned long>(m));
  const int size = m + n;
  std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size));
  // rows hold coefficients from the leading term down
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeffs()[m - j];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeffs()[n - j];
  }
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (s[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < size; ++r) {
        if (s[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(s[k], s[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        s[i][j] = (s[i][j] * s[k][k] - s[i][k] * s[k][j]) / prev;
      }
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  return sign * s[size - 1][size - 1];
}

BigInt discriminant(const ZPoly& f) {
  const int n = f.degree();
  if (n < 1) fail(ErrorCode::kInvalidArgument, "discriminant: degree must be at least 1");
  BigInt r = resultant(f, f.derivative()) / f.lead();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

std::vector<BigRat> rational_roots(const ZPoly& f) {
  if (f.is_zero()) fail(ErrorCode::kInvalidArgument, "rational_roots: zero polynomial");
  std::set<BigRat> found;
  ZPoly g = f;
  // strip the factor x^k
  size_t k = 0;
  while (k < g.coeffs().size() && g.coeffs()[k] == 0) ++k;
  if (k > 0) {
    found.insert(BigRat(0));
    g = ZPoly(std::vector<BigInt>(g.coeffs().begin() + static_cast<long>(k), g.coeffs().end()));
  }
  if (g.degree() >= 1) {
    auto divisors = [](const BigInt& n) {
      Factorization fac = factor_integer(abs(n));
      if (!fac.complete()) fail(ErrorCode::kBudgetExceeded, "rational_roots: cannot factor " + n.get_str());
      std::vector<BigInt> ds{1};
      for (const auto& [p, e] : fac.factors) {
        const size_t base = ds.size();
        BigInt pk = 1;
        for (unsigned i = 0; i < e; ++i) {
          pk *= p;
          for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
        if (ds.size() > 200'000) fail(ErrorCode::kBudgetExceeded, "rational_roots: too many candidate divisors");
      }
      return ds;
    };
    const auto num = divisors(g.coeffs().front());
    const auto den = divisors(g.lead());
    for (const auto& a : num) {
      for (const auto& b : den) {
        for (int s : {1, -1}) {
          BigRat cand(a * s, b);
          cand.canonicalize();
          if (g.eval(cand) == 0) found.insert(cand);
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

unsigned count_real_roots(const ZPoly& f) {
  if (f.degree() < 1) return 0;
  using RatPoly = std::vector<BigRat>;
  auto trim = [](RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  auto rem = [&](RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
      BigRat c = a.back() / b.back();
      const size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
      a.pop_back();
      trim(a);
    }
    return a;
  };
  std::vector<RatPoly> seq;
  RatPoly p0, p1;
  for (const auto& c : f.coeffs()) p0.emplace_back(c);
  const ZPoly df = f.derivative();
  for (const auto& c : df.coeffs()) p1.emplace_back(c);
  seq.push_back(p0);
  seq.push_back(p1);
  while (!seq.back().empty()) {
    RatPoly r = rem(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    seq.push_back(r);
  }
  seq.pop_back();
  auto variations = [&](bool plus_inf) {
    int last = 0;
    unsigned v = 0;
    for (const auto& p : seq) {
      int s = sgn(p.back());
      if (!plus_inf && (p.size() - 1) % 2 == 1) s = -s;
      if (s != 0 && last != 0 && s != last) ++v;
      if (s != 0) last = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

}  // namespace brsieve
