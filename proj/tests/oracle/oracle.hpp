#pragma once
// Slow, independent reference implementations. Nothing here calls into the
// library; tests compare library output against these.

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using i64 = long long;

inline i64 md(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline i64 powmod(i64 b, i64 e, i64 p) {
  i64 r = 1 % p;
  b = md(b, p);
  while (e > 0) {
    if (e & 1) r = static_cast<i64>(static_cast<__int128>(r) * b % p);
    b = static_cast<i64>(static_cast<__int128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Legendre symbol by listing the squares.
inline int legendre(i64 a, i64 p) {
  a = md(a, p);
  if (a == 0) return 0;
  for (i64 y = 1; y < p; ++y) {
    if (y * y % p == a) return 1;
  }
  return -1;
}

// GF(p^k) as F_p[t]/(m), elements are coefficient vectors of length k.
class Gf {
 public:
  using Elem = std::vector<i64>;

  Gf(i64 p, int k) : p_(p), k_(k) {
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    m_ = find_irreducible();
  }

  // Given modulus (ascending, monic); throws if it is reducible.
  Gf(i64 p, std::vector<i64> modulus) : p_(p), k_(static_cast<int>(modulus.size()) - 1), m_(std::move(modulus)) {
    q_ = 1;
    for (int i = 0; i < k_; ++i) q_ *= p;
    if (!irreducible(m_)) throw std::invalid_argument("reducible modulus");
  }

  i64 p() const { return p_; }
  int k() const { return k_; }
  i64 q() const { return q_; }

  Elem elem(i64 index) const {
    Elem e(k_);
    for (int i = 0; i < k_; ++i) {
      e[i] = index % p_;
      index /= p_;
    }
    return e;
  }
  Elem constant(i64 c) const {
    Elem e(k_, 0);
    e[0] = md(c, p_);
    return e;
  }
  i64 index(const Elem& e) const {
    i64 r = 0;
    for (int i = k_ - 1; i >= 0; --i) r = r * p_ + e[i];
    return r;
  }
  bool is_zero(const Elem& a) const {
    for (auto c : a) {
      if (c) return false;
    }
    return true;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (int i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (int i = 0; i < k_; ++i) r[i] = md(a[i] - b[i], p_);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<i64> t(2 * k_, 0);
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p_;
    }
    for (int d = 2 * k_ - 1; d >= k_; --d) {
      i64 c = t[d];
      if (!c) continue;
      for (int i = 0; i <= k_; ++i) t[d - k_ + i] = md(t[d - k_ + i] - c * m_[i], p_);
    }
    return Elem(t.begin(), t.begin() + k_);
  }
  Elem pow(Elem b, i64 e) const {
    Elem r = constant(1);
    while (e > 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  // Integer polynomial (ascending) evaluated at x.
  Elem eval(const std::vector<i64>& f, const Elem& x) const {
    Elem r = constant(0);
    for (size_t i = f.size(); i-- > 0;) r = add(mul(r, x), constant(f[i]));
    return r;
  }
  // Number of y with y^2 = a.
  int sqrt_count(const Elem& a) const {
    if (squares_.empty()) {
      squares_.assign(q_, 0);
      for (i64 i = 0; i < q_; ++i) {
        Elem y = elem(i);
        ++squares_[index(mul(y, y))];
      }
    }
    return squares_[index(a)];
  }

 private:
  // Smallest monic m of degree k with no monic factor of degree <= k/2
  // (trial division over every candidate).
  std::vector<i64> find_irreducible() const {
    if (k_ == 1) return {0, 1};
    i64 count = 1;
    for (int i = 0; i < k_; ++i) count *= p_;
    for (i64 idx = 0; idx < count; ++idx) {
      std::vector<i64> m(k_ + 1);
      i64 t = idx;
      for (int i = 0; i < k_; ++i) {
        m[i] = t % p_;
        t /= p_;
      }
      m[k_] = 1;
      if (m[0] == 0) continue;
      if (irreducible(m)) return m;
    }
    throw std::logic_error("no irreducible polynomial");
  }

  bool irreducible(const std::vector<i64>& m) const {
    const int k = static_cast<int>(m.size()) - 1;
    for (int d = 1; d <= k / 2; ++d) {
      i64 nd = 1;
      for (int i = 0; i < d; ++i) nd *= p_;
      for (i64 j = 0; j < nd; ++j) {
        std::vector<i64> g(d + 1);
        i64 s = j;
        for (int i = 0; i < d; ++i) {
          g[i] = s % p_;
          s /= p_;
        }
        g[d] = 1;
        if (divides(g, m)) return false;
      }
    }
    return true;
  }

  bool divides(const std::vector<i64>& g, std::vector<i64> m) const {
    const int dg = static_cast<int>(g.size()) - 1;
    for (int d = static_cast<int>(m.size()) - 1; d >= dg; --d) {
      i64 c = m[d];
      if (!c) continue;
      for (int i = 0; i <= dg; ++i) m[d - dg + i] = md(m[d - dg + i] - c * g[i], p_);
    }
    for (int i = 0; i < dg; ++i) {
      if (m[i]) return false;
    }
    return true;
  }

  i64 p_;
  int k_;
  i64 q_;
  std::vector<i64> m_;
  mutable std::vector<int> squares_;
};

// #C(F_{p^k}) for the smooth model of y^2 = f(x), f with integer coefficients
// and nonzero leading coefficient mod p.
inline i64 count_hyperelliptic_affine(const Gf& F, const std::vector<i64>& f) {
  i64 n = 0;
  for (i64 i = 0; i < F.q(); ++i) n += F.sqrt_count(F.eval(f, F.elem(i)));
  return n;
}

inline i64 count_hyperelliptic(const std::vector<i64>& f, i64 p, int k) {
  Gf F(p, k);
  const i64 n = count_hyperelliptic_affine(F, f);
  const size_t deg = f.size() - 1;
  if (deg % 2 == 1) return n + 1;
  return n + F.sqrt_count(F.constant(f.back()));
}

// #E(F_{p^k}) for y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6, by checking
// every pair (x, y).
inline i64 count_elliptic(const std::array<i64, 5>& a, i64 p, int k) {
  Gf F(p, k);
  i64 n = 1;
  std::vector<Gf::Elem> all;
  for (i64 i = 0; i < F.q(); ++i) all.push_back(F.elem(i));
  for (const auto& x : all) {
    Gf::Elem rhs = F.eval({a[4], a[3], a[1], 1}, x);
    Gf::Elem lin = F.add(F.mul(F.constant(a[0]), x), F.constant(a[2]));
    for (const auto& y : all) {
      if (F.sub(F.mul(y, F.add(y, lin)), rhs) == F.constant(0)) ++n;
    }
  }
  return n;
}

// L-polynomial coefficients a_0..a_{2g} from N_1..N_g by Newton's identities
// and the functional equation.
inline std::vector<i64> lpoly_from_counts(i64 q, int g, const std::vector<i64>& N) {
  std::vector<i64> s(g + 1), a(2 * g + 1, 0);
  i64 qn = 1;
  for (int n = 1; n <= g; ++n) {
    qn *= q;
    s[n] = qn + 1 - N[n - 1];
  }
  a[0] = 1;
  for (int k = 1; k <= g; ++k) {
    i64 acc = 0;
    for (int i = 1; i <= k; ++i) acc -= s[i] * a[k - i];
    if (acc % k != 0) throw std::logic_error("inconsistent counts");
    a[k] = acc / k;
  }
  for (int i = 0; i < g; ++i) {
    i64 qp = 1;
    for (int j = 0; j < g - i; ++j) qp *= q;
    a[2 * g - i] = qp * a[i];
  }
  return a;
}

// #J(F_{q^n}) = prod (1 - alpha_i^n) from the power sums of the alpha_i.
inline i64 jacobian_order(const std::vector<i64>& L, int n) {
  const int deg = static_cast<int>(L.size()) - 1;
  // power sums s_1..s_{deg*n} of the roots of x^deg L(1/x)
  std::vector<__int128> s(deg * n + 1, 0);
  for (int k = 1; k <= deg * n; ++k) {
    __int128 acc = k <= deg ? -static_cast<__int128>(k) * L[k] : 0;
    for (int i = 1; i < k && i <= deg; ++i) acc -= static_cast<__int128>(L[i]) * s[k - i];
    s[k] = acc;
  }
  // coefficients of prod (1 - alpha^n T) from power sums s_n, s_2n, ...
  std::vector<__int128> b(deg + 1, 0);
  b[0] = 1;
  for (int k = 1; k <= deg; ++k) {
    __int128 acc = 0;
    for (int i = 1; i <= k; ++i) acc -= s[i * n] * b[k - i];
    b[k] = acc / k;
  }
  __int128 total = 0;
  for (auto c : b) total += c;
  return static_cast<i64>(total);
}

// Order of x by repeated addition.
template <class G, class E>
i64 order_by_addition(const G& group, const E& x, i64 limit) {
  E acc = x;
  for (i64 n = 1; n <= limit; ++n) {
    if (acc == group.identity()) return n;
    acc = group.add(acc, x);
  }
  throw std::logic_error("order exceeds limit");
}

// Number of reduced Mumford pairs (u, v) over F_p for y^2 = f(x), f of odd
// degree 2g + 1: u monic, deg v < deg u <= g, u | v^2 - f.
inline i64 count_mumford_pairs(const std::vector<i64>& f, i64 p) {
  const int g = static_cast<int>(f.size() - 2) / 2;
  auto polymod_zero = [&](std::vector<i64> a, const std::vector<i64>& u) {
    const int du = static_cast<int>(u.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= du; --d) {
      i64 c = a[d];
      if (!c) continue;
      for (int i = 0; i <= du; ++i) a[d - du + i] = md(a[d - du + i] - c * u[i], p);
    }
    for (int i = 0; i < du && i < static_cast<int>(a.size()); ++i) {
      if (a[i]) return false;
    }
    return true;
  };
  i64 total = 0;
  for (int du = 0; du <= g; ++du) {
    i64 nu = 1;
    for (int i = 0; i < du; ++i) nu *= p;
    for (i64 ui = 0; ui < nu; ++ui) {
      std::vector<i64> u(du + 1);
      i64 t = ui;
      for (int i = 0; i < du; ++i) {
        u[i] = t % p;
        t /= p;
      }
      u[du] = 1;
      for (i64 vi = 0; vi < nu; ++vi) {
        std::vector<i64> v(std::max(du, 1), 0);
        i64 s = vi;
        for (int i = 0; i < du; ++i) {
          v[i] = s % p;
          s /= p;
        }
        std::vector<i64> w(std::max(2 * v.size(), f.size()), 0);
        for (size_t i = 0; i < v.size(); ++i) {
          for (size_t j = 0; j < v.size(); ++j) w[i + j] = (w[i + j] + v[i] * v[j]) % p;
        }
        for (size_t i = 0; i < f.size(); ++i) w[i] = md(w[i] - f[i], p);
        if (polymod_zero(w, u)) ++total;
      }
    }
  }
  return total;
}

inline std::vector<i64> primes_upto(i64 n) {
  std::vector<i64> out;
  for (i64 v = 2; v <= n; ++v) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

}  // namespace oracle
