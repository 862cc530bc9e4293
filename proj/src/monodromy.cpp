#include "lglab/monodromy.hpp"

#include "lglab/error.hpp"
#include "lglab/linalg.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace lglab {

namespace {

const UPoly kT = UPoly::monomial(1);

int multiplicity(UPoly a, const UPoly& m) {
  if (a.is_zero()) return INT_MAX / 4;
  int k = 0;
  for (;;) {
    auto [q, rem] = a.divmod(m);
    if (!rem.is_zero()) return k;
    a = std::move(q);
    ++k;
  }
}

// a(alpha + s) = sum_k out[k] s^k over Q[t]/(m).
std::vector<UPoly> taylor(const UPoly& a, const UPoly& m) {
  std::vector<UPoly> out;
  UPoly d = a;
  Rational fact = 1;
  for (int k = 0; !d.is_zero(); ++k) {
    if (k > 0) fact *= k;
    out.push_back((d * Rational(1 / fact)) % m);
    d = d.derivative();
  }
  return out;
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  auto e = extended_gcd(a, m);
  if (e.g.degree() != 0) throw InvariantError("element is not invertible modulo " + m.to_string("t"));
  return (e.s * Rational(1 / e.g.leading())) % m;
}

// y (y - 1) ... (y - j + 1)
UPoly falling(int j) {
  UPoly out = UPoly::constant(1);
  for (int k = 0; k < j; ++k) out = out * UPoly({Rational(-k), Rational(1)});
  return out;
}

Matrix multiplication_matrix(const UPoly& e, const UPoly& m) {
  int n = m.degree();
  Matrix a(n, std::vector<Rational>(n, 0));
  for (int j = 0; j < n; ++j) {
    UPoly col = (e * UPoly::monomial(j)) % m;
    for (int i = 0; i < n; ++i) a[i][j] = col.coeff(i);
  }
  return a;
}

Rational trace(const UPoly& e, const UPoly& m) {
  Rational s = 0;
  for (int j = 0; j < m.degree(); ++j) s += ((e * UPoly::monomial(j)) % m).coeff(j);
  return s;
}

UPoly reversed(const UPoly& p) {
  std::vector<Rational> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return UPoly(c);
}

UPoly norm(const std::vector<UPoly>& poly, const UPoly& m) {
  int big = (static_cast<int>(poly.size()) - 1) * m.degree();
  std::vector<Rational> xs, vs;
  for (int k = 0; k <= big; ++k) {
    UPoly e;
    Rational pw = 1;
    for (const auto& c : poly) {
      e = e + c * pw;
      pw *= k;
    }
    xs.emplace_back(k);
    vs.push_back(determinant(multiplication_matrix(e % m, m)));
  }
  return interpolate(xs, vs);
}

std::string join_exponents(const std::vector<Rational>& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ", " : "") + to_string(e[i]);
  return s + "}";
}

bool location_less(const SingularPoint& a, const SingularPoint& b) {
  if (a.location != b.location) return a.location == SingularPoint::Location::Rational ||
                                       (a.location == SingularPoint::Location::Algebraic &&
                                        b.location == SingularPoint::Location::Infinity);
  if (a.location == SingularPoint::Location::Rational) return a.value < b.value;
  if (a.location == SingularPoint::Location::Algebraic) {
    if (a.minimal.degree() != b.minimal.degree()) return a.minimal.degree() < b.minimal.degree();
    return a.minimal.coeffs() < b.minimal.coeffs();
  }
  return false;
}

}  // namespace

SingularPoint SingularPoint::at(const Rational& c) {
  SingularPoint p;
  p.value = c;
  return p;
}

SingularPoint SingularPoint::infinity() {
  SingularPoint p;
  p.location = Location::Infinity;
  return p;
}

SingularPoint SingularPoint::algebraic(const UPoly& m) {
  if (m.degree() < 2) throw DomainError("algebraic class needs a minimal polynomial of degree >= 2");
  SingularPoint p;
  p.location = Location::Algebraic;
  p.minimal = m.monic();
  return p;
}

UPoly SingularPoint::modulus() const {
  switch (location) {
    case Location::Rational: return UPoly({-value, Rational(1)});
    case Location::Algebraic: return minimal;
    case Location::Infinity: break;
  }
  throw DomainError("infinity has no modulus");
}

std::string SingularPoint::label(const std::string& var) const {
  switch (location) {
    case Location::Rational: return to_string(value);
    case Location::Infinity: return "inf";
    case Location::Algebraic: return "root of " + minimal.to_string(var);
  }
  return "";
}

bool SingularPoint::same_location(const SingularPoint& o) const {
  if (location != o.location) return false;
  if (location == Location::Rational) return value == o.value;
  if (location == Location::Algebraic) return minimal == o.minimal;
  return true;
}

std::string to_string(SingularPoint::Kind k) {
  switch (k) {
    case SingularPoint::Kind::RegularSingular: return "regular-singular";
    case SingularPoint::Kind::Irregular: return "irregular";
    case SingularPoint::Kind::ApparentCandidate: return "apparent-candidate";
  }
  return "";
}

std::string to_string(MonodromyTag tag) {
  switch (tag) {
    case MonodromyTag::Unipotent: return "Unipotent";
    case MonodromyTag::QuasiUnipotentNonUnipotent: return "QuasiUnipotentNonUnipotent";
    case MonodromyTag::NonQuasiUnipotent: return "NonQuasiUnipotent";
    case MonodromyTag::Indeterminate: return "Indeterminate";
  }
  return "";
}

std::string LocalOperator::to_string() const {
  bool algebraic = point.location == SingularPoint::Location::Algebraic;
  std::ostringstream os;
  bool first = true;
  for (int i = order(); i >= 0; --i) {
    std::string c;
    if (algebraic) {
      std::vector<std::string> parts;
      for (std::size_t k = 0; k < coefficients[i].size(); ++k) {
        if (coefficients[i][k].is_zero()) continue;
        std::string e = "(" + coefficients[i][k].to_string("a") + ")";
        if (k > 0) e += "*s" + (k > 1 ? "^" + std::to_string(k) : std::string());
        parts.push_back(e);
      }
      for (std::size_t j = 0; j < parts.size(); ++j) c += (j ? " + " : "") + parts[j];
    } else {
      std::vector<Rational> v;
      for (const auto& e : coefficients[i]) v.push_back(e.coeff(0));
      UPoly p(v);
      if (!p.is_zero()) c = p.to_string("s");
    }
    if (c.empty()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (i > 0) os << "*theta" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

std::vector<UPoly> derivative_form(const DifferentialOperator& L) {
  int r = L.order();
  // D^i = sum_k S(i, k) t^k (d/dt)^k
  std::vector<std::vector<Integer>> S(r + 1, std::vector<Integer>(r + 1, 0));
  S[0][0] = 1;
  for (int i = 1; i <= r; ++i)
    for (int k = 1; k <= i; ++k) S[i][k] = k * S[i - 1][k] + S[i - 1][k - 1];
  std::vector<UPoly> a(r + 1);
  for (int k = 0; k <= r; ++k) {
    UPoly sum;
    for (int i = k; i <= r; ++i)
      if (S[i][k] != 0) sum = sum + L.coefficient(i) * Rational(S[i][k]);
    a[k] = sum * UPoly::monomial(k);
  }
  return a;
}

LocalOperator localize(const DifferentialOperator& L, const SingularPoint& p) {
  if (L.is_zero()) throw DomainError("localize of the zero operator");
  int r = L.order();
  LocalOperator out;
  out.point = p;
  out.coefficients.assign(r + 1, {});
  if (p.location == SingularPoint::Location::Infinity) {
    int dmax = L.coefficient(r).degree();
    for (int i = 0; i < r; ++i)
      if (L.coefficient(i).degree() > dmax)
        throw UnsupportedError("irregular singular point at inf");
    for (int i = 0; i <= r; ++i) {
      Rational sign = (i % 2) ? -1 : 1;
      for (int k = 0; k <= dmax; ++k) out.coefficients[i].push_back(UPoly::constant(sign * L.coefficient(i).coeff(dmax - k)));
    }
  } else {
    UPoly m = p.modulus();
    auto a = derivative_form(L);
    int vr = multiplicity(a[r], m);
    for (int i = 0; i < r; ++i)
      if (multiplicity(a[i], m) - i < vr - r)
        throw UnsupportedError("irregular singular point at " + p.label());
    int v = vr - r;
    std::vector<std::vector<UPoly>> b(r + 1);
    std::size_t len = 0;
    for (int j = 0; j <= r; ++j) {
      auto T = taylor(a[j], m);
      for (int idx = 0; idx < static_cast<int>(T.size()); ++idx) {
        int k = idx - j - v;
        if (k < 0) continue;
        if (static_cast<int>(b[j].size()) <= k) b[j].resize(k + 1);
        b[j][k] = T[idx];
      }
      len = std::max(len, b[j].size());
    }
    for (int i = 0; i <= r; ++i) {
      out.coefficients[i].assign(len, UPoly());
      for (int j = i; j <= r; ++j) {
        Rational s1 = falling(j).coeff(i);
        if (s1 == 0) continue;
        for (std::size_t k = 0; k < b[j].size(); ++k) out.coefficients[i][k] = out.coefficients[i][k] + b[j][k] * s1;
      }
    }
  }
  for (auto& c : out.coefficients)
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  return out;
}

IndicialData indicial_polynomial(const DifferentialOperator& L, const SingularPoint& p) {
  LocalOperator loc = localize(L, p);
  int r = loc.order();
  bool algebraic = p.location == SingularPoint::Location::Algebraic;
  UPoly m = algebraic ? p.minimal : kT;
  IndicialData d;
  d.point = p;
  for (int i = 0; i <= r; ++i) d.polynomial.push_back(loc.coefficients[i].empty() ? UPoly() : loc.coefficients[i][0]);
  if (std::all_of(d.polynomial.begin(), d.polynomial.end(), [](const UPoly& c) { return c.is_zero(); }))
    throw InvariantError("indicial polynomial vanishes identically at " + p.label());
  if (d.polynomial[r].is_zero())
    throw InvariantError("indicial polynomial has degree below the order at " + p.label());
  UPoly inv = inverse_mod(d.polynomial[r], m);
  for (auto& c : d.polynomial) c = (c * inv) % m;

  int n = 1;
  if (algebraic) {
    n = m.degree();
    d.rational_form = norm(d.polynomial, m).monic();
  } else {
    std::vector<Rational> c;
    for (const auto& e : d.polynomial) c.push_back(e.coeff(0));
    d.rational_form = UPoly(c);
  }
  for (const auto& [f, e] : factor(d.rational_form).factors) {
    if (f.degree() == 1) {
      if (e % n != 0) throw InvariantError("norm multiplicity not divisible by the class degree");
      for (int k = 0; k < e / n; ++k) d.exponents.push_back(-f.coeff(0));
    } else {
      for (int k = 0; k < e; ++k) d.residual.push_back(f);
    }
  }
  std::sort(d.exponents.begin(), d.exponents.end());
  return d;
}

MonodromyClass classify_point(const IndicialData& data) {
  MonodromyClass c;
  if (data.point.kind == SingularPoint::Kind::Irregular) {
    c.tag = MonodromyTag::Indeterminate;
    c.justification = "irregular singular point " + data.point.label();
    return c;
  }
  if (!data.residual.empty()) {
    c.tag = MonodromyTag::NonQuasiUnipotent;
    c.justification = "irrational exponents: roots of " + data.residual.front().to_string("y");
    return c;
  }
  auto bad = std::find_if(data.exponents.begin(), data.exponents.end(), [](const Rational& q) { return !is_integer(q); });
  if (bad != data.exponents.end()) {
    c.tag = MonodromyTag::QuasiUnipotentNonUnipotent;
    c.justification = "exponents " + join_exponents(data.exponents) + " are rational; " + to_string(*bad) +
                      " is not an integer, so exp(2*pi*i*" + to_string(*bad) + ") != 1";
    return c;
  }
  c.tag = MonodromyTag::Unipotent;
  c.justification = "exponents " + join_exponents(data.exponents) + " are all integers";
  return c;
}

std::vector<SingularPoint> singular_points(const DifferentialOperator& L) {
  if (L.is_zero()) throw DomainError("singular points of the zero operator");
  std::vector<SingularPoint> pts{SingularPoint::at(0)};
  for (const auto& [f, e] : factor(L.coefficient(L.order())).factors) {
    if (f.degree() == 1) {
      if (f.coeff(0) != 0) pts.push_back(SingularPoint::at(-f.coeff(0)));
    } else {
      pts.push_back(SingularPoint::algebraic(f));
    }
  }
  std::sort(pts.begin(), pts.end(), location_less);
  pts.push_back(SingularPoint::infinity());
  for (auto& p : pts) {
    try {
      IndicialData d = indicial_polynomial(L, p);
      bool apparent = d.residual.empty();
      for (std::size_t i = 0; apparent && i < d.exponents.size(); ++i)
        apparent = is_integer(d.exponents[i]) && d.exponents[i] >= 0 && (i == 0 || d.exponents[i] != d.exponents[i - 1]);
      p.kind = apparent ? SingularPoint::Kind::ApparentCandidate : SingularPoint::Kind::RegularSingular;
    } catch (const UnsupportedError&) {
      p.kind = SingularPoint::Kind::Irregular;
    }
  }
  return pts;
}

bool fuchs_relation_check(const DifferentialOperator& L, const std::vector<SingularPoint>& points) {
  int r = L.order();
  Rational half = Rational(r * (r - 1)) / 2;
  Rational total = 0;
  for (const auto& p : points) {
    if (p.kind == SingularPoint::Kind::Irregular)
      throw UnsupportedError("Fuchs relation needs regular singular points; " + p.label() + " is irregular");
    IndicialData d = indicial_polynomial(L, p);
    if (p.location == SingularPoint::Location::Algebraic) {
      total += -trace(d.polynomial[r - 1], p.minimal) - half * p.minimal.degree();
    } else {
      total += -d.polynomial[r - 1].coeff(0) - half;
    }
  }
  return total == -2 * half;
}

bool fuchs_relation_check(const DifferentialOperator& L) { return fuchs_relation_check(L, singular_points(L)); }

std::vector<PointAnalysis> analyze_operator(const DifferentialOperator& L) {
  std::vector<PointAnalysis> out;
  for (const auto& p : singular_points(L)) {
    PointAnalysis a;
    a.point = p;
    if (p.kind == SingularPoint::Kind::Irregular) {
      a.monodromy = {MonodromyTag::Indeterminate, "irregular singular point " + p.label()};
    } else {
      a.indicial = indicial_polynomial(L, p);
      a.indicial->point = p;
      a.monodromy = classify_point(*a.indicial);
    }
    out.push_back(std::move(a));
  }
  return out;
}

SingularPoint fiber_point(const SingularPoint& t_point, const Rational& shift) {
  SingularPoint out;
  switch (t_point.location) {
    case SingularPoint::Location::Infinity: out = SingularPoint::at(shift); break;
    case SingularPoint::Location::Rational:
      out = t_point.value == 0 ? SingularPoint::infinity() : SingularPoint::at(shift + 1 / t_point.value);
      break;
    case SingularPoint::Location::Algebraic:
      out = SingularPoint::algebraic(reversed(t_point.minimal).shift(-shift));
      break;
  }
  out.kind = t_point.kind;
  return out;
}

SingularPoint operator_point(const SingularPoint& fiber, const Rational& shift) {
  SingularPoint out;
  switch (fiber.location) {
    case SingularPoint::Location::Infinity: out = SingularPoint::at(0); break;
    case SingularPoint::Location::Rational:
      out = fiber.value == shift ? SingularPoint::infinity() : SingularPoint::at(1 / (fiber.value - shift));
      break;
    case SingularPoint::Location::Algebraic:
      out = SingularPoint::algebraic(reversed(fiber.minimal.shift(shift)));
      break;
  }
  out.kind = fiber.kind;
  return out;
}

}  // namespace lglab
