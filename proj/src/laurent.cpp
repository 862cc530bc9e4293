#include "lglab/laurent.hpp"

#include "lglab/error.hpp"
#include "lglab/factor.hpp"
#include "lglab/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace lglab {

MonomialMap MonomialMap::identity(std::size_t n) {
  MonomialMap m;
  m.matrix.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m.matrix[i][i] = 1;
  m.scalars.assign(n, 1);
  return m;
}

long long MonomialMap::determinant() const {
  Matrix a;
  for (const auto& row : matrix) a.emplace_back(row.begin(), row.end());
  return lglab::determinant(a).get_num().get_si();
}

std::vector<std::string> laurent_ring(std::vector<std::string> torus,
                                      const std::vector<std::string>& parameters) {
  std::sort(torus.begin(), torus.end());
  torus.erase(std::unique(torus.begin(), torus.end()), torus.end());
  torus.insert(torus.end(), parameters.begin(), parameters.end());
  return torus;
}

LaurentPolynomial::LaurentPolynomial(Polynomial numerator, Exponents denominator,
                                     std::vector<std::string> parameters)
    : numerator_(std::move(numerator)),
      denominator_(std::move(denominator)),
      parameters_(std::move(parameters)) {
  const auto& vars = numerator_.variables();
  if (denominator_.size() != vars.size())
    throw InvariantError("denominator length does not match variable count");
  std::size_t torus = vars.size() - parameters_.size();
  for (std::size_t i = 0; i < parameters_.size(); ++i)
    if (vars[torus + i] != parameters_[i])
      throw InvariantError("parameters must trail the variable list");
  for (std::size_t i = torus; i < vars.size(); ++i)
    if (denominator_[i] != 0) throw InvariantError("parameter in a Laurent denominator");
  if (numerator_.is_zero()) {
    std::fill(denominator_.begin(), denominator_.end(), 0);
    return;
  }
  Exponents cancel(vars.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < torus; ++i) {
    cancel[i] = std::min(denominator_[i], numerator_.min_degree_in(i));
    if (cancel[i]) any = true;
    denominator_[i] -= cancel[i];
  }
  if (any) {
    std::vector<Term> terms = numerator_.terms();
    for (auto& t : terms)
      for (std::size_t i = 0; i < torus; ++i) t.exponents[i] -= cancel[i];
    numerator_ = Polynomial(vars, std::move(terms));
  }
}

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<std::string> variables,
                                                std::vector<std::string> parameters,
                                                const std::vector<LaurentTerm>& terms) {
  Exponents den(variables.size(), 0);
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    for (std::size_t i = 0; i < e.size(); ++i) den[i] = std::max(den[i], -e[i]);
  }
  std::vector<Term> out;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    Exponents n(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) n[i] = e[i] + den[i];
    out.push_back({std::move(n), c});
  }
  return LaurentPolynomial(Polynomial(std::move(variables), std::move(out)), std::move(den),
                           std::move(parameters));
}

LaurentPolynomial LaurentPolynomial::constant(const Rational& c) {
  return LaurentPolynomial(Polynomial::constant({}, c), {}, {});
}

std::vector<std::string> LaurentPolynomial::torus_variables() const {
  const auto& v = variables();
  return std::vector<std::string>(v.begin(), v.begin() + torus_dimension());
}

std::vector<LaurentTerm> LaurentPolynomial::terms() const {
  std::vector<LaurentTerm> out;
  out.reserve(numerator_.size());
  for (const auto& t : numerator_.terms()) {
    LaurentExponents e(t.exponents.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.exponents[i] - denominator_[i];
    out.emplace_back(std::move(e), t.coefficient);
  }
  return out;
}

std::vector<LaurentExponents> LaurentPolynomial::torus_support() const {
  std::set<LaurentExponents> seen;
  std::size_t n = torus_dimension();
  for (const auto& [e, c] : terms()) seen.insert(LaurentExponents(e.begin(), e.begin() + n));
  return {seen.begin(), seen.end()};
}

Rational LaurentPolynomial::constant_term() const {
  if (has_parameters())
    throw ParameterError("constant term requires all parameters to be specialized");
  return numerator_.coefficient(denominator_);
}

LaurentPolynomial LaurentPolynomial::power(unsigned k) const {
  Exponents den = denominator_;
  for (auto& d : den) d *= static_cast<int>(k);
  return LaurentPolynomial(numerator_.pow(k), std::move(den), parameters_);
}

LaurentPolynomial LaurentPolynomial::substitute_monomial(const MonomialMap& m) const {
  std::size_t n = torus_dimension();
  if (m.matrix.size() != n || m.scalars.size() != n)
    throw DomainError("monomial map size does not match the torus dimension");
  for (const auto& row : m.matrix)
    if (row.size() != n) throw DomainError("monomial map matrix is not square");
  if (m.determinant() == 0) throw DomainError("monomial map is degenerate");
  for (const auto& s : m.scalars)
    if (s == 0) throw DomainError("monomial map scalar is zero");
  std::vector<LaurentTerm> out;
  for (const auto& [e, c] : terms()) {
    LaurentExponents f = e;
    Rational coeff = c;
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = 0;
      for (std::size_t j = 0; j < n; ++j) f[i] += m.matrix[i][j] * e[j];
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (e[j] == 0 || m.scalars[j] == 1) continue;
      Rational s = e[j] > 0 ? m.scalars[j] : 1 / m.scalars[j];
      for (int k = 0; k < std::abs(e[j]); ++k) coeff *= s;
    }
    out.emplace_back(std::move(f), coeff);
  }
  std::vector<std::string> vars = variables();
  std::vector<LaurentTerm> merged;
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& t : out) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  return from_terms(vars, parameters_, merged);
}

LaurentPolynomial LaurentPolynomial::specialize(const std::map<std::string, Rational>& assignment) const {
  for (const auto& [k, v] : assignment)
    if (std::find(parameters_.begin(), parameters_.end(), k) == parameters_.end())
      throw ParameterError("unknown parameter '" + k + "'");
  std::size_t n = torus_dimension();
  Polynomial num = numerator_;
  for (std::size_t i = 0; i < parameters_.size(); ++i) {
    auto it = assignment.find(parameters_[i]);
    if (it == assignment.end()) throw ParameterError("missing value for parameter '" + parameters_[i] + "'");
    if (it->second == 0) throw DomainError("parameter '" + parameters_[i] + "' must be nonzero");
    num = num.evaluate_at(n + i, it->second);
  }
  std::vector<std::string> torus = torus_variables();
  num = num.embed(torus);
  Exponents den(denominator_.begin(), denominator_.begin() + n);
  return LaurentPolynomial(std::move(num), std::move(den), {});
}

LaurentPolynomial LaurentPolynomial::embed_torus(const std::vector<std::string>& torus) const {
  auto vars = laurent_ring(torus, parameters_);
  Polynomial num = numerator_.embed(vars);
  Exponents den(vars.size(), 0);
  for (std::size_t i = 0; i < variables().size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), variables()[i]);
    den[it - vars.begin()] = denominator_[i];
  }
  return LaurentPolynomial(std::move(num), std::move(den), parameters_);
}

namespace {

std::pair<LaurentPolynomial, LaurentPolynomial> unify(const LaurentPolynomial& a,
                                                      const LaurentPolynomial& b) {
  if (a.variables() == b.variables() && a.parameters() == b.parameters()) return {a, b};
  std::vector<std::string> params = a.parameters();
  for (const auto& p : b.parameters())
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  std::vector<std::string> torus = a.torus_variables();
  for (const auto& v : b.torus_variables()) torus.push_back(v);
  for (const auto& p : params)
    if (std::find(torus.begin(), torus.end(), p) != torus.end())
      throw ParameterError("'" + p + "' is a parameter in one operand and a variable in the other");
  auto vars = laurent_ring(torus, params);
  auto lift = [&](const LaurentPolynomial& f) {
    auto fv = f.terms();
    std::vector<LaurentTerm> out;
    for (auto& [e, c] : fv) {
      LaurentExponents g(vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), f.variables()[i]);
        g[it - vars.begin()] = e[i];
      }
      out.emplace_back(std::move(g), c);
    }
    return LaurentPolynomial::from_terms(vars, params, out);
  };
  return {lift(a), lift(b)};
}

Polynomial shifted_numerator(const LaurentPolynomial& f, const Exponents& target) {
  Exponents s(target.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = target[i] - f.denominator()[i];
  return f.numerator() * Polynomial::monomial(f.variables(), s);
}

}  // namespace

LaurentPolynomial operator+(const LaurentPolynomial& x, const LaurentPolynomial& y) {
  auto [a, b] = unify(x, y);
  Exponents den(a.variables().size());
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = std::max(a.denominator()[i], b.denominator()[i]);
  Polynomial num = shifted_numerator(a, den) + shifted_numerator(b, den);
  return LaurentPolynomial(std::move(num), std::move(den), a.parameters());
}

LaurentPolynomial operator-(const LaurentPolynomial& x, const LaurentPolynomial& y) {
  auto [a, b] = unify(x, y);
  LaurentPolynomial nb(-b.numerator(), b.denominator(), b.parameters());
  return a + nb;
}

LaurentPolynomial operator*(const LaurentPolynomial& x, const LaurentPolynomial& y) {
  auto [a, b] = unify(x, y);
  Exponents den(a.variables().size());
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = a.denominator()[i] + b.denominator()[i];
  return LaurentPolynomial(a.numerator() * b.numerator(), std::move(den), a.parameters());
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_ &&
         a.parameters_ == b.parameters_;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c0] : terms()) {
    Rational c = c0;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool has_vars = std::any_of(e.begin(), e.end(), [](int v) { return v != 0; });
    bool wrote = false;
    if (c != 1 || !has_vars) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (wrote) os << '*';
      os << variables()[i];
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

// Rational function num/den used while parsing.
struct Fraction {
  Polynomial num, den;
};

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> vars)
      : text_(text), vars_(std::move(vars)) {}

  Fraction parse_all() {
    Fraction f = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Fraction constant(const Rational& c) const {
    return {Polynomial::constant(vars_, c), Polynomial::constant(vars_, 1)};
  }

  static void simplify(Fraction& f) {
    if (f.num.is_zero()) {
      f.den = Polynomial::constant(f.den.variables(), 1);
      return;
    }
    if (f.den.size() == 1) {
      const auto& lead = f.den.leading_term();
      Exponents cancel(lead.exponents.size());
      for (std::size_t i = 0; i < cancel.size(); ++i)
        cancel[i] = std::min(lead.exponents[i], f.num.min_degree_in(i));
      Polynomial m = Polynomial::monomial(f.den.variables(), cancel, lead.coefficient);
      f.num = *f.num.divide_exact(m);
      f.den = *f.den.divide_exact(m);
      return;
    }
    Polynomial g = gcd(f.num, f.den);
    f.num = *f.num.divide_exact(g);
    f.den = *f.den.divide_exact(g);
    Rational lc = f.den.leading_term().coefficient;
    f.num *= 1 / lc;
    f.den *= 1 / lc;
  }

  Fraction expr() {
    skip();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Fraction acc = term();
    if (negate) acc.num = -acc.num;
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), false);
      } else if (accept('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  static Fraction add(const Fraction& a, Fraction b, bool subtract) {
    if (subtract) b.num = -b.num;
    Fraction r;
    if (a.den == b.den) {
      r = {a.num + b.num, a.den};
    } else if (a.den.size() == 1 && b.den.size() == 1) {
      const auto& ea = a.den.leading_term().exponents;
      const auto& eb = b.den.leading_term().exponents;
      Exponents l(ea.size()), sa(ea.size()), sb(ea.size());
      for (std::size_t i = 0; i < l.size(); ++i) {
        l[i] = std::max(ea[i], eb[i]);
        sa[i] = l[i] - ea[i];
        sb[i] = l[i] - eb[i];
      }
      const auto& vars = a.num.variables();
      r.num = a.num * Polynomial::monomial(vars, sa, 1 / a.den.leading_term().coefficient) +
              b.num * Polynomial::monomial(vars, sb, 1 / b.den.leading_term().coefficient);
      r.den = Polynomial::monomial(vars, l);
    } else {
      r = {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    simplify(r);
    return r;
  }

  Fraction term() {
    Fraction acc = factor();
    for (;;) {
      skip();
      std::size_t at = pos_;
      if (accept('*')) {
        Fraction b = factor();
        acc = {acc.num * b.num, acc.den * b.den};
        simplify(acc);
      } else if (accept('/')) {
        Fraction b = factor();
        if (b.num.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = {acc.num * b.den, acc.den * b.num};
        simplify(acc);
      } else {
        return acc;
      }
    }
  }

  Fraction factor() {
    Fraction b = base();
    skip();
    if (!accept('^')) return b;
    skip();
    std::size_t at = pos_;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("exponent too large");
    }
    unsigned k = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    if (neg) {
      if (b.num.is_zero()) {
        pos_ = at;
        fail("zero raised to a negative power");
      }
      std::swap(b.num, b.den);
    }
    Fraction r{b.num.pow(k), b.den.pow(k)};
    simplify(r);
    return r;
  }

  Fraction base() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
              std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      return {Polynomial::variable(vars_, static_cast<std::size_t>(it - vars_.begin())),
              Polynomial::constant(vars_, 1)};
    }
    if (c == '(') {
      ++pos_;
      Fraction f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

std::vector<std::string> scan_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c >= 'a' && c <= 'z') {
      std::size_t start = i;
      while (i < text.size() && ((text[i] >= 'a' && text[i] <= 'z') ||
                                 std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.emplace_back(text.substr(start, i - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '_' ||
                                 (text[i] >= 'a' && text[i] <= 'z'))) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw ParseError("implicit multiplication is not allowed", i);
        ++i;
      }
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(std::string_view text,
                                           const std::vector<std::string>& parameters) {
  std::vector<std::string> torus;
  for (auto& id : scan_identifiers(text))
    if (std::find(parameters.begin(), parameters.end(), id) == parameters.end()) torus.push_back(id);
  auto vars = laurent_ring(torus, parameters);
  Parser parser(text, vars);
  Fraction f = parser.parse_all();
  if (f.den.size() != 1) throw ParseError("not Laurent: denominator is not a monomial", 0);
  const auto& lead = f.den.leading_term();
  std::size_t n = vars.size() - parameters.size();
  for (std::size_t i = n; i < vars.size(); ++i)
    if (lead.exponents[i] != 0)
      throw ParseError("not Laurent: parameter '" + vars[i] + "' in the denominator", 0);
  Polynomial num = f.num * (1 / lead.coefficient);
  return LaurentPolynomial(std::move(num), lead.exponents, parameters);
}

}  // namespace lglab
