#include "lglab/upoly.hpp"

#include "lglab/error.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>

namespace lglab {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::from_roots(const std::vector<Rational>& roots) {
  UPoly p = constant(1);
  for (const auto& r : roots) p = p * UPoly({-r, 1});
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
}

int UPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const Rational& c) {
  if (c == 0) return UPoly();
  UPoly r = a;
  for (auto& x : r.c_) x *= c;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw DomainError("univariate division by zero");
  std::vector<Rational> r = c_;
  int dd = d.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rational> q(degree() - dd + 1);
  Rational inv = 1 / d.leading();
  for (int i = degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] * inv;
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
  }
  r.resize(dd);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(v));
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

UPoly UPoly::shift(const Rational& c) const { return compose(UPoly({c, 1})); }

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

std::vector<Integer> UPoly::primitive_integer() const {
  Integer g = 0, l = 1;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& x : c_) {
    Rational y = x * Rational(l) / Rational(g);
    out.push_back(y.get_num());
  }
  if (!out.empty() && out.back() < 0)
    for (auto& x : out) x = -x;
  return out;
}

UPoly UPoly::from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> v(c.begin(), c.end());
  return UPoly(std::move(v));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0 = UPoly::constant(1), s1, t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<std::pair<UPoly, int>> squarefree(const UPoly& p) {
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() <= 0) return out;
  UPoly dp = p.derivative();
  UPoly b = gcd(p, dp);
  UPoly c = p.divmod(b).first;
  UPoly d = dp.divmod(b).first - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    UPoly a = gcd(c, d);
    c = c.divmod(a).first;
    d = d.divmod(a).first - c.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    ++i;
  }
  return out;
}

Rational resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int m = a.degree(), n = b.degree();
  if (n == 0) {
    Rational r = 1;
    for (int i = 0; i < m; ++i) r *= b.leading();
    return r;
  }
  UPoly r = a % b;
  if (r.is_zero()) return 0;
  int k = r.degree();
  Rational f = 1;
  for (int i = 0; i < m - k; ++i) f *= b.leading();
  if ((m * n) % 2) f = -f;
  return f * resultant(b, r);
}

namespace {

// Polynomials over F_p, p < 2^20, low-degree first.
using ModPoly = std::vector<std::int64_t>;

struct Fp {
  std::int64_t p;

  std::int64_t norm(std::int64_t x) const {
    x %= p;
    return x < 0 ? x + p : x;
  }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t r = 1, b = norm(a), e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  void trim(ModPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] - b[i]);
    trim(r);
    return r;
  }
  ModPoly add(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] + b[i]);
    trim(r);
    return r;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
  }
  std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
    if (b.empty()) throw InvariantError("modular division by zero");
    if (a.size() < b.size()) return {{}, a};
    ModPoly q(a.size() - b.size() + 1, 0);
    std::int64_t li = inv(b.back());
    for (std::size_t i = a.size(); i-- >= b.size();) {
      std::int64_t f = a[i] * li % p;
      q[i - b.size() + 1] = f;
      if (f)
        for (std::size_t j = 0; j < b.size(); ++j)
          a[i - b.size() + 1 + j] = norm(a[i - b.size() + 1 + j] - f * b[j]);
      if (i == 0) break;
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    std::int64_t li = inv(a.back());
    for (auto& x : a) x = x * li % p;
    return a;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 for coprime a, b.
  std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      ModPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.size() != 1) throw InvariantError("Hensel factors are not coprime modulo p");
    std::int64_t li = inv(r0[0]);
    for (auto& x : s0) x = x * li % p;
    for (auto& x : t0) x = x * li % p;
    return {s0, t0};
  }
  ModPoly derivative(const ModPoly& a) const {
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(norm(a[i] * static_cast<std::int64_t>(i)));
    trim(r);
    return r;
  }
  ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
    ModPoly r{1};
    base = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }
  ModPoly reduce(const std::vector<Integer>& f) const {
    ModPoly r;
    for (const auto& c : f) {
      Integer x = c % p;
      r.push_back(norm(x.get_si()));
    }
    trim(r);
    return r;
  }
};

// Cantor-Zassenhaus: distinct-degree then equal-degree splitting of a
// monic square-free polynomial over F_p (p odd).
std::vector<ModPoly> factor_mod(const Fp& F, const ModPoly& f, std::mt19937_64& rng) {
  std::vector<std::pair<ModPoly, int>> ddf;
  ModPoly rest = f, h{0, 1};
  const ModPoly x{0, 1};
  for (int d = 1; 2 * d <= static_cast<int>(rest.size()) - 1; ++d) {
    h = F.powmod(h, Integer(F.p), rest);
    ModPoly g = F.gcd(F.sub(h, x), rest);
    if (g.size() > 1) {
      ddf.emplace_back(g, d);
      rest = F.divmod(rest, g).first;
      h = F.rem(h, rest);
    }
  }
  if (rest.size() > 1) ddf.emplace_back(F.monic(rest), static_cast<int>(rest.size()) - 1);

  std::vector<ModPoly> out;
  for (auto& [g, d] : ddf) {
    std::vector<ModPoly> work{g};
    while (!work.empty()) {
      ModPoly u = work.back();
      work.pop_back();
      if (static_cast<int>(u.size()) - 1 == d) {
        out.push_back(F.monic(u));
        continue;
      }
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
      e = (e - 1) / 2;
      std::uniform_int_distribution<std::int64_t> dist(0, F.p - 1);
      for (;;) {
        ModPoly a(u.size() - 1);
        for (auto& c : a) c = dist(rng);
        F.trim(a);
        if (a.size() < 2) continue;
        ModPoly b = F.sub(F.powmod(a, e, u), ModPoly{1});
        ModPoly g2 = F.gcd(b, u);
        if (g2.size() > 1 && g2.size() < u.size()) {
          work.push_back(g2);
          work.push_back(F.divmod(u, g2).first);
          break;
        }
      }
    }
  }
  return out;
}

using ZPoly = std::vector<Integer>;

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  return a;
}

ZPoly lift_of(const ModPoly& a) { return ZPoly(a.begin(), a.end()); }

// Linear Hensel lifting of f = g*h (mod p) to modulus p^k, g monic.
std::pair<ZPoly, ZPoly> hensel_lift(const Fp& F, const ZPoly& f, const ModPoly& g0,
                                    const ModPoly& h0, int k) {
  auto [s, t] = F.bezout(g0, h0);
  ZPoly g = lift_of(g0), h = lift_of(h0);
  Integer q = F.p;
  for (int j = 1; j < k; ++j) {
    ZPoly gh = zmul(g, h);
    ZPoly e(std::max(f.size(), gh.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    ModPoly em;
    for (auto& c : e) {
      Integer x = c / q;
      x %= F.p;
      em.push_back(F.norm(x.get_si()));
    }
    F.trim(em);
    auto [quo, dg] = F.divmod(F.mul(t, em), g0);
    ModPoly dh = F.add(F.mul(s, em), F.mul(quo, h0));
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += q * dg[i];
    if (h.size() < dh.size()) h.resize(dh.size(), 0);
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += q * dh[i];
    q *= F.p;
    g = zmod(g, q);
    h = zmod(h, q);
  }
  return {g, h};
}

bool is_prime_small(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ZPoly primitive(ZPoly a) {
  Integer g = 0;
  for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact division over Z; nullopt when b does not divide a.
std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a, q(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (r[i] != 0) {
      if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
      Integer f = r[i] / b.back();
      q[i - b.size() + 1] = f;
      for (std::size_t j = 0; j < b.size(); ++j) r[i - b.size() + 1 + j] -= f * b[j];
    }
    if (i == 0) break;
  }
  for (auto& c : r)
    if (c != 0) return std::nullopt;
  return q;
}

// Zassenhaus factorization of a primitive square-free integer polynomial.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  std::mt19937_64 rng(0x5eed);
  ModPoly fprime;
  Fp best{0};
  std::vector<ModPoly> best_factors;
  int tried = 0;
  for (std::int64_t p = 3; p < 1000 && tried < 5; p += 2) {
    if (!is_prime_small(p)) continue;
    Fp F{p};
    if (f.back() % p == 0) continue;
    ModPoly fm = F.reduce(f);
    if (F.gcd(fm, F.derivative(fm)).size() != 1) continue;
    ++tried;
    auto facs = factor_mod(F, F.monic(fm), rng);
    if (best.p == 0 || facs.size() < best_factors.size()) {
      best = F;
      best_factors = std::move(facs);
    }
    if (best_factors.size() == 1) break;
  }
  if (best.p == 0) throw InvariantError("no suitable prime for factorization");
  if (best_factors.size() == 1) return {f};

  // Mignotte bound times the leading coefficient.
  Integer norm2 = 0;
  for (auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = 2 * abs(f.back()) * root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  int k = 1;
  Integer M = best.p;
  while (M <= bound) {
    M *= best.p;
    ++k;
  }

  std::vector<ZPoly> lifted;
  ZPoly current = f;
  ModPoly current_mod = best.reduce(f);
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    ModPoly rest_mod = best.divmod(current_mod, best_factors[i]).first;
    auto [g, h] = hensel_lift(best, current, best_factors[i], rest_mod, k);
    lifted.push_back(g);
    current = h;
    current_mod = rest_mod;
  }
  // The last cofactor carries the leading coefficient; make it monic mod M.
  {
    Integer li;
    Integer lc = current.back() % M;
    if (lc < 0) lc += M;
    mpz_invert(li.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    for (auto& c : current) c = c * li;
    lifted.push_back(zmod(current, M));
  }

  std::vector<ZPoly> result;
  ZPoly g = f;
  std::vector<ZPoly> pool = lifted;
  Integer half = M / 2;
  auto symmetric = [&](ZPoly a) {
    a = zmod(std::move(a), M);
    for (auto& c : a)
      if (c > half) c -= M;
    return a;
  };
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<int> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
      ZPoly cand{g.back()};
      for (int i : idx) cand = zmod(zmul(cand, pool[i]), M);
      cand = primitive(symmetric(cand));
      if (auto q = zdivide(g, cand)) {
        result.push_back(cand);
        g = primitive(*q);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) pool.erase(pool.begin() + *it);
        found = true;
        break;
      }
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[i] == static_cast<int>(pool.size() - s + i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (g.size() > 1) result.push_back(g);
  return result;
}

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

UFactorization factor(const UPoly& p) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  UFactorization out{p.leading(), {}};
  for (auto& [part, mult] : squarefree(p)) {
    for (auto& z : factor_squarefree_z(part.primitive_integer()))
      out.factors.emplace_back(UPoly::from_integers(z).monic(), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return upoly_less(a.first, b.first); });
  return out;
}

std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  UPoly q = p;
  int v = q.valuation();
  if (v > 0) {
    roots.push_back(0);
    std::vector<Rational> c(q.coeffs().begin() + v, q.coeffs().end());
    q = UPoly(std::move(c));
  }
  for (auto& [f, m] : factor(q).factors)
    if (f.degree() == 1) roots.push_back(-f.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& values) {
  if (xs.size() != values.size()) throw DomainError("interpolation needs one value per node");
  UPoly out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    UPoly basis = UPoly::constant(values[k]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == k) continue;
      if (xs[j] == xs[k]) throw DomainError("interpolation nodes must be distinct");
      basis = basis * UPoly({-xs[j], Rational(1)}) * Rational(1 / (xs[k] - xs[j]));
    }
    out = out + basis;
  }
  return out;
}

}  // namespace lglab
