#include "lglab/factor.hpp"

#include "lglab/error.hpp"
#include "lglab/linalg.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace lglab {

std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::vector<std::vector<Term>> buckets(std::max(p.degree_in(var), 0) + 1);
  for (const auto& t : p.terms()) {
    Term s = t;
    s.exponents[var] = 0;
    buckets[t.exponents[var]].push_back(std::move(s));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(p.variables(), std::move(b));
  return out;
}

UPoly to_upoly(const Polynomial& p, std::size_t var) {
  std::vector<Rational> c(std::max(p.degree_in(var), 0) + 1, 0);
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (i != var && t.exponents[i] != 0)
        throw InvariantError("polynomial is not univariate in the requested variable");
    c[t.exponents[var]] += t.coefficient;
  }
  return UPoly(std::move(c));
}

Polynomial from_upoly(const UPoly& u, const std::vector<std::string>& variables, std::size_t var) {
  std::vector<Term> terms;
  for (int i = 0; i <= u.degree(); ++i) {
    if (u.coeff(i) == 0) continue;
    Exponents e(variables.size(), 0);
    e[var] = i;
    terms.push_back({std::move(e), u.coeff(i)});
  }
  return Polynomial(variables, std::move(terms));
}

bool polynomial_less(const Polynomial& a, const Polynomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const auto& at = a.terms();
  const auto& bt = b.terms();
  for (std::size_t i = 0; i < std::min(at.size(), bt.size()); ++i) {
    int c = grlex_compare(at[i].exponents, bt[i].exponents);
    if (c != 0) return c > 0;
    if (at[i].coefficient != bt[i].coefficient) return at[i].coefficient < bt[i].coefficient;
  }
  return at.size() < bt.size();
}

Polynomial FactorizationResult::expand(const std::vector<std::string>& variables) const {
  Polynomial r = Polynomial::constant(variables, unit);
  for (const auto& [f, m] : factors) r = r * f.embed(variables).pow(m);
  return r;
}

namespace {

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = a.divide_exact(b);
  if (!q) throw InvariantError("expected exact division failed");
  return *q;
}

Polynomial one_like(const Polynomial& p) { return Polynomial::constant(p.variables(), 1); }

Polynomial content_in(const Polynomial& p, std::size_t var);

Polynomial primitive_in(const Polynomial& p, std::size_t var) {
  return exact_quotient(p, content_in(p, var)).normalized();
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  int n = b.degree_in(var);
  Polynomial lcb = coefficients_in(b, var)[n];
  int e = a.degree_in(var) - n + 1;
  Exponents shift(a.variable_count(), 0);
  while (!a.is_zero() && a.degree_in(var) >= n) {
    int da = a.degree_in(var);
    shift[var] = da - n;
    Polynomial lca = coefficients_in(a, var)[da];
    a = lcb * a - lca * Polynomial::monomial(a.variables(), shift) * b;
    --e;
  }
  if (e > 0) a = lcb.pow(e) * a;
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return one_like(a);
  std::size_t n = a.variable_count();
  std::size_t v = n;
  for (std::size_t i = 0; i < n && v == n; ++i)
    if (a.involves(i) || b.involves(i)) v = i;
  if (!a.involves(v)) return gcd(a, content_in(b, v));
  if (!b.involves(v)) return gcd(content_in(a, v), b);

  Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial g0 = gcd(ca, cb);
  Polynomial A = exact_quotient(a, ca), B = exact_quotient(b, cb);
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  while (!B.is_zero()) {
    Polynomial R = pseudo_remainder(A, B, v);
    A = std::move(B);
    if (R.is_zero()) break;
    if (R.degree_in(v) == 0) {
      A = one_like(a);
      break;
    }
    B = primitive_in(R, v);
  }
  if (!A.is_constant()) A = primitive_in(A, v);
  return (A * g0).normalized();
}

namespace {

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.variables());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.normalized() : gcd(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g.is_zero() ? one_like(p) : g;
}

void sort_factors(FactorizationResult& r) {
  std::sort(r.factors.begin(), r.factors.end(), [](const auto& x, const auto& y) {
    if (polynomial_less(x.first, y.first)) return true;
    if (polynomial_less(y.first, x.first)) return false;
    return x.second < y.second;
  });
}

void set_unit(FactorizationResult& r, const Polynomial& p) {
  Rational lc = 1;
  for (const auto& [f, m] : r.factors)
    for (int i = 0; i < m; ++i) lc *= f.leading_term().coefficient;
  r.unit = p.leading_term().coefficient / lc;
}

void yun(const Polynomial& f, std::size_t v, std::vector<std::pair<Polynomial, int>>& out) {
  Polynomial df = f.derivative(v);
  Polynomial b = gcd(f, df);
  Polynomial c = exact_quotient(f, b);
  Polynomial d = exact_quotient(df, b) - c.derivative(v);
  int i = 1;
  while (c.degree_in(v) > 0) {
    Polynomial a = gcd(c, d);
    c = exact_quotient(c, a);
    d = exact_quotient(d, a) - c.derivative(v);
    if (!a.is_constant()) out.emplace_back(a.normalized(), i);
    ++i;
  }
}

void squarefree_rec(const Polynomial& q, std::vector<std::pair<Polynomial, int>>& out) {
  if (q.is_constant()) return;
  auto present = q.present_variables();
  std::size_t v = present.front();
  Polynomial c = content_in(q, v);
  Polynomial f = exact_quotient(q, c).normalized();
  yun(f, v, out);
  squarefree_rec(c, out);
}

}  // namespace

FactorizationResult squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  FactorizationResult r;
  squarefree_rec(p.normalized(), r.factors);
  sort_factors(r);
  set_unit(r, p);
  return r;
}

namespace {

Polynomial monomial_y(const std::vector<std::string>& vars, const Exponents& e, const UPoly& coeff,
                      std::size_t x) {
  Polynomial base = from_upoly(coeff, vars, x);
  return base * Polynomial::monomial(vars, e);
}

// Factors a square-free polynomial into Q-irreducibles via a generic linear
// change making it monic in one variable, a univariate factorization, and
// y-adic Hensel lifting.
std::vector<Polynomial> factor_squarefree(const Polynomial& g, std::mt19937_64& rng) {
  if (g.total_degree() <= 1) return {g.normalized()};
  auto present = g.present_variables();
  const auto& vars = g.variables();
  if (present.size() == 1) {
    std::vector<Polynomial> out;
    for (auto& [u, m] : factor(to_upoly(g, present[0])).factors)
      out.push_back(from_upoly(u, vars, present[0]).normalized());
    return out;
  }
  std::size_t x = present[0];
  std::vector<std::size_t> ys(present.begin() + 1, present.end());
  int n = g.total_degree();

  std::uniform_int_distribution<int> small(-4, 4);
  std::vector<Rational> r(vars.size(), 0), c(vars.size(), 0);
  Polynomial G2;
  UPoly g0;
  Rational lc;
  bool ok = false;
  for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < vars.size(); ++i) images.push_back(Polynomial::variable(vars, i));
    for (auto y : ys) {
      r[y] = attempt == 0 ? 0 : small(rng);
      c[y] = attempt == 0 ? 0 : small(rng);
      images[y] = images[y] + Polynomial::variable(vars, x) * r[y] +
                  Polynomial::constant(vars, c[y]);
    }
    G2 = g.substitute(images);
    if (G2.degree_in(x) != n) continue;
    Polynomial at0 = G2;
    for (auto y : ys) at0 = at0.evaluate_at(y, 0);
    g0 = to_upoly(at0, x);
    if (g0.degree() != n) continue;
    if (gcd(g0, g0.derivative()).degree() != 0) continue;
    lc = g0.leading();
    ok = true;
  }
  if (!ok) throw InvariantError("no admissible specialization found for factorization");

  auto uf = factor(g0);
  if (uf.factors.size() == 1) return {g.normalized()};
  std::vector<UPoly> u;
  for (auto& [f, m] : uf.factors) u.push_back(f);
  std::size_t k = u.size();

  std::vector<UPoly> s(k);
  for (std::size_t i = 0; i < k; ++i) {
    UPoly others = UPoly::constant(1);
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) others = others * u[j];
    s[i] = extended_gcd(others, u[i]).s % u[i];
  }

  std::vector<Polynomial> U;
  for (auto& f : u) U.push_back(from_upoly(f, vars, x));
  auto product = [&](const std::vector<std::size_t>& idx) {
    Polynomial p = Polynomial::constant(vars, 1);
    for (auto i : idx) p = p * U[i];
    return p;
  };
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;

  Rational inv_lc = 1 / lc;
  for (int deg = 1; deg <= n; ++deg) {
    Polynomial e = (G2 - product(all) * lc).homogeneous_part(ys, deg);
    if (e.is_zero()) continue;
    std::map<Exponents, std::vector<Rational>> by_y;
    for (const auto& t : e.terms()) {
      Exponents ey = t.exponents;
      int dx = ey[x];
      ey[x] = 0;
      auto& col = by_y[ey];
      if (static_cast<int>(col.size()) <= dx) col.resize(dx + 1, 0);
      col[dx] += t.coefficient;
    }
    for (auto& [ey, col] : by_y) {
      UPoly ea = UPoly(col) * inv_lc;
      for (std::size_t i = 0; i < k; ++i) {
        UPoly delta = (ea * s[i]) % u[i];
        if (!delta.is_zero()) U[i] += monomial_y(vars, ey, delta, x);
      }
    }
  }

  std::vector<Polynomial> found;
  if (product(all) * lc == G2) {
    found = U;
  } else {
    Polynomial remaining = G2;
    std::vector<std::size_t> pool = all;
    std::size_t size = 1;
    while (2 * size <= pool.size()) {
      bool hit = false;
      std::vector<std::size_t> idx(size);
      for (std::size_t i = 0; i < size; ++i) idx[i] = i;
      for (;;) {
        std::vector<std::size_t> chosen;
        int d = 0;
        for (auto i : idx) {
          chosen.push_back(pool[i]);
          d += u[pool[i]].degree();
        }
        Polynomial cand = product(chosen).truncated(ys, d);
        if (auto q = remaining.divide_exact(cand)) {
          found.push_back(cand);
          remaining = *q;
          for (auto it = idx.rbegin(); it != idx.rend(); ++it) pool.erase(pool.begin() + *it);
          hit = true;
          break;
        }
        int i = static_cast<int>(size) - 1;
        while (i >= 0 && idx[i] == pool.size() - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (!hit) ++size;
    }
    if (!remaining.is_constant()) found.push_back(remaining);
  }

  std::vector<Polynomial> back;
  for (std::size_t i = 0; i < vars.size(); ++i) back.push_back(Polynomial::variable(vars, i));
  for (auto y : ys)
    back[y] = back[y] - Polynomial::variable(vars, x) * r[y] - Polynomial::constant(vars, c[y]);
  std::vector<Polynomial> out;
  for (auto& f : found) out.push_back(f.substitute(back).normalized());
  return out;
}

bool certify_irreducible(const Polynomial& h, std::mt19937_64& rng) {
  int d = h.total_degree();
  if (d <= 1) return true;
  std::uniform_int_distribution<int> small(-7, 7);
  std::vector<std::string> sv{"s"};
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < h.variable_count(); ++i) {
      Polynomial im = Polynomial::constant(sv, small(rng)) + Polynomial::variable(sv, 0) * small(rng);
      images.push_back(std::move(im));
    }
    UPoly line = to_upoly(h.substitute(images), 0);
    if (line.degree() != d) continue;
    auto f = factor(line);
    if (f.factors.size() == 1 && f.factors[0].second == 1) return true;
  }
  return false;
}

}  // namespace

FactorizationResult factor_form(const Polynomial& p, int max_factor_degree, std::uint64_t seed) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  if (p.total_degree() > 6)
    throw UnsupportedError("factorization supports total degree <= 6, got " +
                           std::to_string(p.total_degree()));
  std::mt19937_64 rng(seed);
  FactorizationResult r;
  Polynomial rest = p.normalized();
  const auto& vars = p.variables();
  for (std::size_t v = 0; v < vars.size(); ++v) {
    int k = rest.min_degree_in(v);
    if (k == 0) continue;
    Exponents e(vars.size(), 0);
    e[v] = k;
    rest = exact_quotient(rest, Polynomial::monomial(vars, e));
    r.factors.emplace_back(Polynomial::variable(vars, v), k);
  }
  for (auto& [part, m] : squarefree_decomposition(rest).factors)
    for (auto& f : factor_squarefree(part, rng)) r.factors.emplace_back(f, m);
  r.certified = true;
  for (const auto& [f, m] : r.factors)
    if (f.total_degree() > max_factor_degree || !certify_irreducible(f, rng)) r.certified = false;
  sort_factors(r);
  set_unit(r, p);
  if (r.expand(vars) != p) throw InvariantError("factorization does not multiply back to its input");
  return r;
}

int vanishing_order(const Polynomial& p, const Polynomial& l1, const Polynomial& l2) {
  if (p.is_zero()) throw DomainError("vanishing order of the zero polynomial");
  const auto& vars = p.variables();
  std::size_t n = vars.size();
  auto row_of = [&](const Polynomial& l) {
    Polynomial e = l.embed(vars);
    if (!e.is_homogeneous() || e.total_degree() != 1)
      throw DomainError("locus must be cut out by linear forms");
    std::vector<Rational> row(n, 0);
    for (const auto& t : e.terms())
      for (std::size_t i = 0; i < n; ++i)
        if (t.exponents[i]) row[i] = t.coefficient;
    return row;
  };
  Matrix a{row_of(l1), row_of(l2)};
  if (rank(a) < 2) throw DomainError("degenerate locus: linear forms are dependent");
  for (std::size_t i = 0; i < n && a.size() < n; ++i) {
    std::vector<Rational> e(n, 0);
    e[i] = 1;
    a.push_back(e);
    if (rank(a) < a.size()) a.pop_back();
  }
  auto inv = inverse(a);
  if (!inv) throw InvariantError("completed basis is singular");
  auto uvars = standard_variables(n, "u");
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial im(uvars);
    for (std::size_t k = 0; k < n; ++k)
      if ((*inv)[j][k] != 0) im += Polynomial::variable(uvars, k) * (*inv)[j][k];
    images.push_back(std::move(im));
  }
  Polynomial q = p.substitute(images);
  int best = -1;
  for (const auto& t : q.terms()) {
    int d = t.exponents[0] + t.exponents[1];
    if (best < 0 || d < best) best = d;
  }
  return best;
}

}  // namespace lglab
