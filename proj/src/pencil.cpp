#include "lglab/pencil.hpp"

#include "lglab/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lglab {

namespace {

Polynomial xyzt() { return Polynomial::monomial(pencil_variables(), {1, 1, 1, 1}); }

Polynomial coordinate(std::size_t i) { return Polynomial::variable(pencil_variables(), i); }

// Index of the coordinate when g is a scalar multiple of one.
std::optional<std::size_t> as_coordinate(const Polynomial& g) {
  if (g.size() != 1 || g.total_degree() != 1) return std::nullopt;
  const auto& e = g.terms()[0].exponents;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) return i;
  return std::nullopt;
}

BaseCurve make_curve(std::size_t v, const Polynomial& g) {
  BaseCurve c;
  if (auto w = as_coordinate(g)) {
    c.hyperplane = std::min(v, *w);
    c.form = coordinate(std::max(v, *w));
  } else {
    c.hyperplane = v;
    c.form = g.normalized();
  }
  return c;
}

std::string curve_key(const BaseCurve& c) { return pencil_variables()[c.hyperplane] + ";" + c.form.to_string(); }

int point_order(const Polynomial& G, ProjectivePoint P) {
  std::size_t k = 0;
  while (P[k] == 0) ++k;
  Rational s = P[k];
  for (auto& v : P) v /= s;
  auto uvars = standard_variables(4, "u");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == k) {
      images.push_back(Polynomial::constant(uvars, 1));
    } else {
      images.push_back(Polynomial::variable(uvars, i) + Polynomial::constant(uvars, P[i]));
    }
  }
  Polynomial q = G.substitute(images);
  if (q.is_zero()) throw DomainError("member vanishes identically");
  int best = q.total_degree();
  for (const auto& t : q.terms()) {
    int d = 0;
    for (int e : t.exponents) d += e;
    best = std::min(best, d);
  }
  return best;
}

// Points of a non-linear base curve: solve for a variable occurring
// linearly, otherwise search small integer points.
std::vector<ProjectivePoint> curve_points(const BaseCurve& c) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != c.hyperplane) free.push_back(i);
  std::vector<Polynomial> grad;
  for (auto i : free) grad.push_back(c.form.derivative(i));
  std::vector<ProjectivePoint> out;
  auto accept = [&](const ProjectivePoint& p) {
    std::vector<Rational> pt(p.begin(), p.end());
    if (p == ProjectivePoint{0, 0, 0, 0} || c.form.evaluate(pt) != 0) return;
    if (std::all_of(grad.begin(), grad.end(), [&](const Polynomial& g) { return g.evaluate(pt) == 0; })) return;
    ProjectivePoint n = normalize_point(p);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  };
  for (std::size_t w = 0; w < 3; ++w) {
    std::size_t var = free[w];
    if (c.form.degree_in(var) != 1) continue;
    auto parts = coefficients_in(c.form, var);
    std::size_t a = free[(w + 1) % 3], b = free[(w + 2) % 3];
    const int vals[] = {1, 2, -1, 3, -2, 5, 7, -3};
    for (int i : vals)
      for (int j : vals) {
        std::vector<Rational> pt(4, 0);
        pt[a] = i;
        pt[b] = j;
        Rational c1 = parts[1].evaluate(pt);
        if (c1 == 0) continue;
        pt[var] = -parts[0].evaluate(pt) / c1;
        accept({pt[0], pt[1], pt[2], pt[3]});
        if (out.size() >= 6) return out;
      }
  }
  const int R = 4;
  for (int a = -R; a <= R && out.size() < 6; ++a)
    for (int b = -R; b <= R && out.size() < 6; ++b)
      for (int d = -R; d <= R && out.size() < 6; ++d) {
        ProjectivePoint p{0, 0, 0, 0};
        p[free[0]] = a;
        p[free[1]] = b;
        p[free[2]] = d;
        accept(p);
      }
  return out;
}

}  // namespace

const std::vector<std::string>& pencil_variables() {
  static const std::vector<std::string> vars{"x", "y", "z", "t"};
  return vars;
}

Polynomial QuarticPencil::member(const Rational& lambda) const { return F - xyzt() * lambda; }

QuarticPencil homogenize(const LaurentPolynomial& f) {
  if (f.has_parameters()) throw ParameterError("homogenize needs a fully specialized polynomial");
  if (f.torus_dimension() != 3)
    throw DomainError("homogenize needs three torus variables, got " + std::to_string(f.torus_dimension()));
  const auto& den = f.denominator();
  for (int e : den)
    if (e > 1) throw DomainError("not quartic: denominator does not divide xyz");
  Polynomial num = f.numerator().renamed({"x", "y", "z"});
  Exponents clear(3);
  for (int i = 0; i < 3; ++i) clear[i] = 1 - den[i];
  Polynomial G = num * Polynomial::monomial(num.variables(), clear);
  if (G.total_degree() != 4)
    throw DomainError("not quartic: cleared polynomial has degree " + std::to_string(G.total_degree()));
  std::vector<Term> terms;
  for (const auto& t : G.terms()) {
    Exponents e = t.exponents;
    e.push_back(4 - (e[0] + e[1] + e[2]));
    terms.push_back({e, t.coefficient});
  }
  QuarticPencil p{Polynomial(pencil_variables(), terms), f};
  for (std::size_t i = 0; i < 4; ++i)
    if (p.F.min_degree_in(i) > 0) throw DomainError("quartic is divisible by " + pencil_variables()[i]);
  return p;
}

std::optional<int> BaseLocusReport::multiplicity(const std::string& label) const {
  for (const auto& [c, m] : curves)
    if (c.label == label) return m;
  return std::nullopt;
}

BaseLocusReport base_locus(const QuarticPencil& p) {
  BaseLocusReport report;
  std::map<std::string, std::pair<BaseCurve, int>> acc;
  std::vector<std::vector<std::pair<std::string, int>>> keyed(4);
  for (std::size_t v = 0; v < 4; ++v) {
    Polynomial R = p.F.evaluate_at(v, 0);
    auto fac = factor_form(R);
    report.certified = report.certified && fac.certified;
    int degree = 0;
    for (const auto& [g, e] : fac.factors) {
      BaseCurve c = make_curve(v, g);
      std::string key = curve_key(c);
      keyed[v].emplace_back(key, e);
      degree += e * g.total_degree();
      auto it = acc.find(key);
      if (it == acc.end()) {
        acc.emplace(key, std::make_pair(c, e));
      } else {
        it->second.second += e;
      }
    }
    if (degree != 4) throw InvariantError("hyperplane section of degree " + std::to_string(degree));
    report.hyperplane_sections.push_back({v, {}, fac.certified});
  }
  // Lines are named by their equations; other curves by plane and degree.
  const auto& names = pencil_variables();
  std::map<std::string, int> counts, seen;
  for (auto& [key, entry] : acc) {
    const BaseCurve& c = entry.first;
    if (!c.is_line()) ++counts[names[c.hyperplane] + "; deg " + std::to_string(c.degree())];
  }
  std::map<std::string, std::string> label_of;
  for (auto& [key, entry] : acc) {
    BaseCurve& c = entry.first;
    if (c.is_line()) {
      c.label = "L{" + names[c.hyperplane] + "; " + c.form.to_string() + "}";
    } else {
      std::string tag = names[c.hyperplane] + "; deg " + std::to_string(c.degree());
      c.label = "C{" + tag + "}";
      if (counts[tag] > 1) c.label += "#" + std::to_string(++seen[tag]);
    }
    label_of[key] = c.label;
    report.curves.push_back(entry);
  }
  std::sort(report.curves.begin(), report.curves.end(),
            [](const auto& a, const auto& b) { return a.first.label < b.first.label; });
  for (std::size_t v = 0; v < 4; ++v)
    for (const auto& [key, e] : keyed[v]) report.hyperplane_sections[v].components.emplace_back(label_of[key], e);
  return report;
}

int member_multiplicity(const QuarticPencil& p, const BaseCurve& c, const Rational& lambda) {
  Polynomial G = p.member(lambda);
  if (c.is_line()) return vanishing_order(G, coordinate(c.hyperplane), c.form);
  auto pts = curve_points(c);
  if (pts.empty()) throw UnsupportedError("annotation required: no small rational point on " + c.label);
  int best = -1;
  for (const auto& P : pts) {
    int o = point_order(G, P);
    if (best < 0 || o < best) best = o;
  }
  return best;
}

int exceptional_count(int m, int M) {
  if (M > m)
    throw InvariantError("member multiplicity " + std::to_string(M) + " exceeds base multiplicity " + std::to_string(m));
  return M >= 2 ? m - 1 : 0;
}

std::vector<ReducibleFiber> find_reducible_lambdas(const QuarticPencil& p, const std::vector<Rational>& candidates) {
  if (candidates.empty()) throw DomainError("no candidate fibers");
  std::vector<ReducibleFiber> out;
  std::set<Rational> seen;
  for (const auto& lambda : candidates) {
    if (!seen.insert(lambda).second) continue;
    auto fac = factor_form(p.member(lambda));
    bool reducible = fac.distinct() >= 2 ||
                     std::any_of(fac.factors.begin(), fac.factors.end(), [](const auto& f) { return f.second >= 2; });
    if (reducible || !fac.certified) out.push_back({lambda, fac, !fac.certified});
  }
  return out;
}

std::string to_string(const ProjectivePoint& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < 4; ++i) s += (i ? ":" : "") + to_string(p[i]);
  return s + "]";
}

ProjectivePoint normalize_point(ProjectivePoint p) {
  std::size_t k = 0;
  while (k < 4 && p[k] == 0) ++k;
  if (k == 4) throw DomainError("projective point with all coordinates zero");
  Rational s = p[k];
  for (auto& v : p) v /= s;
  return p;
}

FiberReport fiber_report(const QuarticPencil& p, const Rational& lambda, const std::vector<Annotation>& annotations) {
  FiberReport r;
  r.lambda = lambda;
  r.s_components = factor_form(p.member(lambda));
  int curve_sum = 0;
  for (const auto& [c, m] : base_locus(p).curves) {
    CurveContribution cc{c, m, std::nullopt, 0};
    try {
      cc.M = member_multiplicity(p, c, lambda);
      cc.C = exceptional_count(m, *cc.M);
    } catch (const UnsupportedError&) {
      r.incomplete = true;
    }
    if (cc.M && *cc.M >= 3 && r.reduced) {
      r.reduced = false;
      r.nonreduced_reason = "multiplicity " + std::to_string(*cc.M) + " along " + c.label;
    }
    curve_sum += cc.C;
    r.curves.push_back(std::move(cc));
  }
  for (const auto& [g, e] : r.s_components.factors)
    if (e >= 2) {
      r.reduced = false;
      r.nonreduced_reason = "component " + g.to_string() + " has multiplicity " + std::to_string(e);
      break;
    }
  r.automated_rho = static_cast<int>(r.s_components.distinct()) + curve_sum;
  r.rho = r.automated_rho;
  for (const auto& a : annotations) {
    if (a.lambda != lambda) continue;
    if (a.d_value < 0) throw DomainError("annotation d_value must be non-negative");
    r.points.push_back(a);
    r.rho += a.d_value;
    r.annotated = true;
  }
  return r;
}

std::optional<NonreducedComponent> detect_nonreduced_torus(const LaurentPolynomial& f, const Rational& lambda) {
  if (f.has_parameters()) throw ParameterError("detect_nonreduced_torus needs a fully specialized polynomial");
  const Polynomial& num = f.numerator();
  Polynomial g = num - Polynomial::monomial(num.variables(), f.denominator(), lambda);
  if (g.is_zero()) throw DomainError("fiber is the whole torus");
  std::optional<NonreducedComponent> best;
  for (const auto& [h, e] : squarefree_decomposition(g).factors)
    if (e >= 2 && !h.is_constant() && (!best || e > best->multiplicity)) best = NonreducedComponent{h, e};
  return best;
}

FixedSingularLocus fixed_singular_points(const QuarticPencil& p) {
  FixedSingularLocus out;
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < 4; ++i) partials.push_back(p.F.derivative(i));
  std::set<ProjectivePoint> found;
  const auto& names = pencil_variables();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < 4; ++k)
        if (k != i && k != j) rest.push_back(k);
      std::vector<Polynomial> restricted;
      for (const auto& d : partials) {
        Polynomial q = d.evaluate_at(i, 0).evaluate_at(j, 0);
        if (!q.is_zero()) restricted.push_back(std::move(q));
      }
      if (restricted.empty()) {
        out.singular_lines.push_back("L{" + names[i] + "; " + names[j] + "}");
        continue;
      }
      auto point = [&](const Rational& a, const Rational& b) {
        ProjectivePoint P{0, 0, 0, 0};
        P[rest[0]] = a;
        P[rest[1]] = b;
        return normalize_point(P);
      };
      bool at_end = std::all_of(restricted.begin(), restricted.end(), [&](const Polynomial& q) {
        std::vector<Rational> pt(4, 0);
        pt[rest[0]] = 1;
        return q.evaluate(pt) == 0;
      });
      if (at_end) found.insert(point(1, 0));
      UPoly g;
      for (const auto& q : restricted) g = gcd(g, to_upoly(q.evaluate_at(rest[1], 1), rest[0]));
      if (g.degree() < 1) continue;
      for (const auto& r : rational_roots(g)) found.insert(point(r, 1));
    }
  out.points.assign(found.begin(), found.end());
  return out;
}

}  // namespace lglab
