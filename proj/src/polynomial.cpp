#include "lglab/polynomial.hpp"

#include "lglab/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace lglab {

namespace {

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables())
    throw InvariantError("polynomial operands live over different variable lists");
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

int grlex_compare(const Exponents& a, const Exponents& b) {
  int da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial::Polynomial(std::vector<std::string> variables, std::vector<Term> terms)
    : variables_(std::move(variables)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.exponents.size() != variables_.size())
      throw InvariantError("exponent vector length does not match variable count");
  normalize();
}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
  Polynomial p(std::move(variables));
  if (c != 0) p.terms_.push_back({Exponents(p.variables_.size(), 0), c});
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
  Exponents e(variables.size(), 0);
  e.at(index) = 1;
  return monomial(std::move(variables), std::move(e), 1);
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, Exponents exponents,
                                const Rational& c) {
  Polynomial p(std::move(variables));
  if (exponents.size() != p.variables_.size())
    throw InvariantError("exponent vector length does not match variable count");
  if (c != 0) p.terms_.push_back({std::move(exponents), c});
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return grlex_compare(a.exponents, b.exponents) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exponents == t.exponents)
      out.back().coefficient += t.coefficient;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coefficient == 0; }),
            out.end());
  terms_ = std::move(out);
}

std::optional<std::size_t> Polynomial::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exponents) == 0);
}

Rational Polynomial::constant_value() const {
  if (!terms_.empty() && degree_of(terms_.back().exponents) == 0) return terms_.back().coefficient;
  return 0;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : degree_of(terms_.front().exponents);
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[var]);
  return d;
}

int Polynomial::min_degree_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  int d = terms_.front().exponents[var];
  for (const auto& t : terms_) d = std::min(d, t.exponents[var]);
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree_of(terms_.front().exponents);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return degree_of(t.exponents) == d; });
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.exponents[var] != 0; });
}

std::vector<std::size_t> Polynomial::present_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < variables_.size(); ++v)
    if (involves(v)) out.push_back(v);
  return out;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exponents& x) {
    return grlex_compare(t.exponents, x) > 0;
  });
  if (it != terms_.end() && it->exponents == e) return it->coefficient;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && variables_.empty()) variables_ = other.variables_;
  require_same_ring(*this, other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == other.terms_.size()) c = 1;
    else c = grlex_compare(terms_[i].exponents, other.terms_[j].exponents);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(other.terms_[j++]);
    } else {
      Rational s = terms_[i].coefficient + other.terms_[j].coefficient;
      if (s != 0) out.push_back({std::move(terms_[i].exponents), s});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

// Johnson's heap multiplication: one cursor per term of `a` walking `b`;
// exponent sums leave the heap in descending grlex order.
Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    const auto& vars = a.variables().empty() ? b.variables() : a.variables();
    return Polynomial(vars);
  }
  require_same_ring(a, b);
  const auto& at = a.terms();
  const auto& bt = b.terms();
  if (at.size() > bt.size()) return b * a;

  struct Entry {
    Exponents exp;
    std::size_t i, j;
  };
  auto less = [](const Entry& x, const Entry& y) { return grlex_compare(x.exp, y.exp) < 0; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(less)> heap(less);
  for (std::size_t i = 0; i < at.size(); ++i)
    heap.push({add_exponents(at[i].exponents, bt[0].exponents), i, 0});

  std::vector<Term> out;
  while (!heap.empty()) {
    Entry e = heap.top();
    heap.pop();
    Rational c = at[e.i].coefficient * bt[e.j].coefficient;
    if (!out.empty() && out.back().exponents == e.exp)
      out.back().coefficient += c;
    else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back({e.exp, c});
    }
    if (e.j + 1 < bt.size())
      heap.push({add_exponents(at[e.i].exponents, bt[e.j + 1].exponents), e.i, e.j + 1});
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  Polynomial r(a.variables());
  r.terms_ = std::move(out);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && a.variables_ != b.variables_) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponents != b.terms_[i].exponents ||
        a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(variables_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Term d = t;
    d.coefficient *= t.exponents[var];
    d.exponents[var] -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial(variables_, std::move(out));
}

Polynomial Polynomial::evaluate_at(std::size_t var, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term s = t;
    if (t.exponents[var] != 0) {
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), t.exponents[var]);
      mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), t.exponents[var]);
      s.coefficient *= p;
      s.exponents[var] = 0;
    }
    out.push_back(std::move(s));
  }
  return Polynomial(variables_, std::move(out));
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      for (int k = 0; k < t.exponents[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != variables_.size())
    throw InvariantError("substitution needs one image per variable");
  std::vector<std::string> target = images.empty() ? variables_ : images.front().variables();
  for (const auto& img : images)
    if (!img.is_zero() && img.variables() != target)
      throw InvariantError("substitution images live over different rings");
  // Cache powers per variable since terms share them heavily.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t v, int k) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[v].embed(target));
    return cache[k];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial m = constant(target, t.coefficient);
    for (std::size_t v = 0; v < t.exponents.size(); ++v)
      if (t.exponents[v]) m = m * power_of(v, t.exponents[v]);
    result += m;
  }
  return result;
}

Polynomial Polynomial::embed(const std::vector<std::string>& target) const {
  if (target == variables_) return *this;
  std::vector<std::size_t> map(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    auto it = std::find(target.begin(), target.end(), variables_[i]);
    if (it == target.end()) {
      if (involves(i))
        throw InvariantError("cannot embed: variable '" + variables_[i] + "' missing from target");
      map[i] = target.size();
    } else {
      map[i] = static_cast<std::size_t>(it - target.begin());
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target.size(), 0);
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i]) e[map[i]] = t.exponents[i];
    out.push_back({std::move(e), t.coefficient});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::renamed(std::vector<std::string> names) const {
  if (names.size() != variables_.size()) throw InvariantError("rename changes arity");
  Polynomial r = *this;
  r.variables_ = std::move(names);
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return Polynomial(divisor.variables());
  require_same_ring(*this, divisor);
  const Term& lead = divisor.leading_term();
  Polynomial rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& r = rem.leading_term();
    Exponents e(r.exponents.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = r.exponents[i] - lead.exponents[i];
      if (e[i] < 0) return std::nullopt;
    }
    Rational c = r.coefficient / lead.coefficient;
    quotient.push_back({e, c});
    rem -= monomial(variables_, e, c) * divisor;
  }
  return Polynomial(variables_, std::move(quotient));
}

Polynomial Polynomial::homogeneous_part(const std::vector<std::size_t>& vars, int degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int d = 0;
    for (auto v : vars) d += t.exponents[v];
    if (d == degree) out.push_back(t);
  }
  return Polynomial(variables_, std::move(out));
}

Polynomial Polynomial::truncated(const std::vector<std::size_t>& vars, int degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int d = 0;
    for (auto v : vars) d += t.exponents[v];
    if (d <= degree) out.push_back(t);
  }
  return Polynomial(variables_, std::move(out));
}

Rational Polynomial::normalizing_unit() const {
  if (terms_.empty()) return 1;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  Rational unit(num_gcd, den_lcm);
  unit.canonicalize();
  if (terms_.front().coefficient < 0) unit = -unit;
  return unit;
}

Polynomial Polynomial::normalized() const {
  Polynomial r = *this;
  if (r.is_zero()) return r;
  Rational inv = 1 / normalizing_unit();
  for (auto& t : r.terms_) t.coefficient *= inv;
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  Rational inv = 1 / terms_.front().coefficient;
  for (auto& t : r.terms_) t.coefficient *= inv;
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool has_vars = degree_of(t.exponents) > 0;
    bool wrote = false;
    if (c != 1 || !has_vars) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (!t.exponents[i]) continue;
      if (wrote) os << '*';
      os << variables_[i];
      if (t.exponents[i] > 1) os << '^' << t.exponents[i];
      wrote = true;
    }
  }
  return os.str();
}

std::vector<std::string> standard_variables(std::size_t n, std::string_view stem) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::string(stem) + std::to_string(i));
  return v;
}

}  // namespace lglab
