#include "lglab/catalog.hpp"
#include "lglab/error.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace lglab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

const std::vector<FamilyRecord>& catalog() {
  static const auto c = load_catalog(LGLAB_DATA_DIR "/catalog.json");
  return c;
}

const AnnotationSet& annotations() {
  static const auto a = load_annotations(LGLAB_DATA_DIR "/annotations.json");
  return a;
}

ClassifyOptions options(const std::string& id) {
  ClassifyOptions o;
  o.annotations = annotations().for_family(id);
  o.annotations_complete = annotations().partial.count(id) == 0;
  return o;
}

const Verdict& verdict(const std::string& id) {
  static std::map<std::string, Verdict> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, classify_family(find_family(catalog(), id), options(id))).first;
  return it->second;
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (const auto& q : v) out += (out.empty() ? "" : ", ") + to_string(q);
  return "{" + out + "}";
}

DifferentialOperator D() { return DifferentialOperator::theta(); }

DifferentialOperator c(const Rational& q) { return DifferentialOperator::multiplier(UPoly::constant(q)); }

DifferentialOperator t(int k, const Rational& q = 1) { return DifferentialOperator::multiplier(UPoly::monomial(k, q)); }

// Constant terms of f^j by plain expansion of the full power.
std::vector<Integer> brute_force_periods(int n) {
  using Key = std::array<int, 3>;
  std::map<Key, Integer> f;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b) {
      Integer coeff = factorial(3) / (factorial(a) * factorial(b) * factorial(3 - a - b));
      f[{a - 1, b - 1, -1}] += coeff;
    }
  f[{0, 0, 1}] += 1;
  std::map<Key, Integer> power{{{0, 0, 0}, 1}};
  std::vector<Integer> out{1};
  for (int j = 1; j <= n; ++j) {
    std::map<Key, Integer> next;
    for (const auto& [e, v] : power)
      for (const auto& [g, w] : f) next[{e[0] + g[0], e[1] + g[1], e[2] + g[2]}] += v * w;
    power = std::move(next);
    auto it = power.find({0, 0, 0});
    out.push_back(it == power.end() ? Integer(0) : it->second);
  }
  return out;
}

Outcome cubic_periods() {
  Outcome o;
  const int n = 16;
  auto seq = period_sequence(LaurentPolynomial::parse("(x+y+1)^3/(x*y*z)+z"), n);
  auto oracle = brute_force_periods(n);
  o.expect(seq.length() == n + 1, "sequence length");
  for (int j = 0; j <= n && j < static_cast<int>(seq.length()); ++j) {
    Rational closed = 0;
    if (j % 2 == 0) {
      unsigned k = j / 2;
      Integer den = factorial(k);
      den = den * den * den * den * den;
      closed = Rational(factorial(2 * k) * factorial(3 * k), den);
      closed.canonicalize();
    }
    o.expect(seq.coefficients[j] == closed, "closed form at j=" + std::to_string(j));
    o.expect(seq.coefficients[j] == Rational(oracle[j]), "brute-force oracle at j=" + std::to_string(j));
  }
  o.notes.push_back("c_16 = " + to_string(seq.coefficients[n]));
  return o;
}

DifferentialOperator op_113() { return (D() * D() * D() - t(2, 12) * (c(3) * D() + c(2)) * (c(3) * D() + c(4)) * (D() + c(1))).normalized(); }

DifferentialOperator op_17() {
  auto L = D() * D() * D() - t(1) * (c(2) * D() + c(1)) * (c(13) * D() * D() + c(13) * D() + c(4)) -
           t(2, 3) * (D() + c(1)) * (c(3) * D() + c(4)) * (c(3) * D() + c(2));
  return L.normalized();
}

DifferentialOperator recover(const std::string& id, int terms) {
  const auto& rec = find_family(catalog(), id);
  auto f = specialize_family(rec, {}) - LaurentPolynomial::constant(rec.period_shift);
  return find_picard_fuchs(period_sequence(f, terms - 1), {4, 5, 20});
}

Outcome pf_113() {
  Outcome o;
  auto L = recover("1-13", 60);
  o.expect(L == op_113(), "operator equals D^3 - 12t^2(3D+2)(3D+4)(D+1)");
  o.notes.push_back(L.to_string());
  return o;
}

Outcome pf_17() {
  Outcome o;
  auto L = recover("1-7", 60);
  o.expect(L == op_17(), "operator equals D^3 - t(2D+1)(13D^2+13D+4) - 3t^2(D+1)(3D+4)(3D+2)");
  bool over4 = false;
  for (const auto& p : singular_points(L)) {
    auto fp = fiber_point(p, 5);
    if (fp.location == SingularPoint::Location::Rational && fp.value == 4) over4 = true;
  }
  o.expect(over4, "a singular point lies over lambda = 4");
  o.notes.push_back("period of f - 5; t = -1 lies over lambda = 4");
  return o;
}

Outcome indicial() {
  Outcome o;
  auto L = op_113();
  auto data = indicial_polynomial(L, SingularPoint::infinity());
  auto expected = UPoly::from_roots({1, Rational(2, 3), Rational(4, 3)});
  o.expect(data.rational_form == expected, "indicial polynomial at inf is (y-1)(y-2/3)(y-4/3)");
  o.expect(classify_point(data).tag == MonodromyTag::QuasiUnipotentNonUnipotent, "1-13 at inf");
  auto K = op_17();
  auto p = operator_point(SingularPoint::at(4), 5);
  auto d17 = indicial_polynomial(K, p);
  o.expect(classify_point(d17).tag == MonodromyTag::QuasiUnipotentNonUnipotent, "1-7 over lambda = 4");
  o.notes.push_back("1-13 at inf " + join(data.exponents) + "; 1-7 over 4 (t = " + p.label() + ") " + join(d17.exponents));
  return o;
}

Outcome pencil_212() {
  Outcome o;
  const auto& rec = find_family(catalog(), "2-12");
  auto p = homogenize(specialize_family(rec, {{"a", 2}}));
  auto base = base_locus(p);
  o.expect(base.curves.size() == 12, "12 base curves");
  std::set<std::string> doubled{"L{x; y}", "L{y; z}", "L{x; t}", "L{z; t}"};
  for (const auto& [curve, m] : base.curves) {
    o.expect(curve.is_line(), curve.label + " is a line");
    o.expect(m == (doubled.count(curve.label) ? 2 : 1), "m of " + curve.label);
  }
  const auto& v = verdict("2-12");
  std::vector<Rational> candidates{0, 16, 81};
  for (int k = -20; k <= 20; ++k) candidates.push_back(Rational(k) / 3);
  for (const auto& pa : v.points) {
    auto fp = fiber_point(pa.point, 0);
    if (fp.location == SingularPoint::Location::Rational) candidates.push_back(fp.value);
  }
  auto red = find_reducible_lambdas(p, candidates);
  o.expect(red.size() == 1 && red[0].lambda == 0, "reducible fibers = {0}");
  auto f0 = fiber_report(p, 0);
  o.expect(f0.s_components.distinct() == 4, "4 components");
  o.expect(f0.reduced, "reduced");
  o.expect(f0.rho == 4, "rho = 4");
  o.expect(v.theorem1_check && v.theorem1_check->sum == 3 && v.theorem1_check->expected == 3 &&
               v.theorem1_check->flag == "match",
           "hodge check (3, 3, match)");
  return o;
}

Outcome pencil_16() {
  Outcome o;
  auto p = homogenize(specialize_family(find_family(catalog(), "1-6"), {}));
  auto base = base_locus(p);
  for (const auto* label : {"L{x; z + t}", "L{y; x + z + t}"}) {
    bool found = false;
    for (const auto& [curve, m] : base.curves) {
      if (curve.label != label) continue;
      found = true;
      int M = member_multiplicity(p, curve, 0);
      o.expect(M == 2, std::string("M = 2 on ") + label);
      o.expect(exceptional_count(m, M) == 1, std::string("exceptional count 1 on ") + label);
    }
    o.expect(found, std::string("base curve ") + label);
  }
  auto ann = annotations().for_family("1-6");
  o.expect(ann.size() == 2, "two shipped annotations");
  auto f = fiber_report(p, 0, ann);
  o.expect(f.rho == 8, "rho = 8");
  o.notes.push_back("automated rho " + std::to_string(f.automated_rho) + ", annotated rho " + std::to_string(f.rho));
  return o;
}

Outcome nonreduced() {
  Outcome o;
  auto m12 = detect_nonreduced_torus(LaurentPolynomial::parse("(x+y+z+1)^4/(x*y*z)"), 0);
  auto m11 = detect_nonreduced_torus(LaurentPolynomial::parse("(x+y+z+1)^6/(x*y*z)"), 0);
  o.expect(m12 && m12->multiplicity == 4, "1-2 model multiplicity 4");
  o.expect(m11 && m11->multiplicity == 6, "1-1 model multiplicity 6");
  for (const auto* id : {"1-1", "1-2", "1-3", "1-4", "1-5", "1-11", "1-12", "2-1", "2-2", "2-3", "2-6", "2-8", "3-1"}) {
    const auto& v = verdict(id);
    bool ok = v.status == VerdictStatus::Determined && v.nonreduced && v.rational == Rationality::NonRational &&
              v.theorem2_consistent && !v.monodromy.empty() &&
              v.monodromy[0].monodromy.tag == MonodromyTag::QuasiUnipotentNonUnipotent;
    o.expect(ok, std::string("verdict for ") + id);
  }
  return o;
}

Outcome unipotent_18() {
  Outcome o;
  const auto& v = verdict("1-8");
  o.expect(v.status == VerdictStatus::Determined, "determined");
  o.expect(!v.monodromy.empty(), "a reducible fiber");
  for (const auto& m : v.monodromy) {
    bool integral = true;
    for (const auto& e : m.exponents) integral = integral && is_integer(e);
    o.expect(integral, "integral exponents over " + to_string(m.lambda));
    o.expect(m.monodromy.tag == MonodromyTag::Unipotent, "unipotent over " + to_string(m.lambda));
    o.notes.push_back("lambda " + to_string(m.lambda) + ": " + join(m.exponents));
  }
  o.expect(v.theorem2_consistent, "consistent");
  return o;
}

Outcome sweeps() {
  Outcome o;
  std::vector<ParameterAssignment> grid{{{"a", 2}}, {{"a", 3}}, {{"a", 5}}, {{"a", 7}}, {{"a", 1}}};
  auto s = parameter_sweep(find_family(catalog(), "2-12"), grid);
  o.expect(s.constant, "2-12 constant over a in {2, 3, 5, 7}");
  o.expect(s.walls == std::vector<std::size_t>{4}, "a = 1 is the only wall");
  std::optional<std::vector<Rational>> first;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& p = s.points[i];
    std::vector<Rational> at0;
    for (const auto& m : p.monodromy)
      if (m.lambda == 0) {
        at0 = m.exponents;
        o.expect(m.monodromy.tag == MonodromyTag::Unipotent, "unipotent at a = " + to_string(p.parameters.at("a")));
      }
    o.expect(!at0.empty(), "exponents at lambda = 0");
    if (!first) first = at0;
    o.expect(at0 == *first, "same exponents at a = " + to_string(p.parameters.at("a")));
  }
  if (first) o.notes.push_back("2-12 exponents at 0: " + join(*first));

  SweepOptions pencil_only;
  pencil_only.monodromy = false;
  std::vector<ParameterAssignment> g32;
  for (int a : {1, 2, 5})
    for (int b : {1, 3, 7}) g32.push_back({{"a", a}, {"b", b}});
  auto t = parameter_sweep(find_family(catalog(), "3-2"), g32, pencil_only);
  bool same = true;
  for (const auto& p : t.points) same = same && p.base_locus == t.points[0].base_locus;
  o.expect(same, "3-2 base locus identical over the 3x3 grid");
  return o;
}

std::vector<std::vector<int>> random_unimodular(std::mt19937_64& rng) {
  std::vector<std::vector<int>> m{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::uniform_int_distribution<int> idx(0, 2), coeff(-2, 2);
  for (int step = 0; step < 4; ++step) {
    int i = idx(rng), j = idx(rng), k = coeff(rng);
    if (i == j || k == 0) continue;
    for (int col = 0; col < 3; ++col) m[i][col] += k * m[j][col];
  }
  if (rng() % 2) std::swap(m[0], m[1]);
  if (rng() % 2)
    for (auto& v : m[2]) v = -v;
  return m;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(2024);

  const char* models[] = {"(x+y+1)^3/(x*y*z)+z", "(x+y)*(y+z)*(z+1)*(x+2)/(x*y*z)",
                          "(x+1)*(y+1)*(z+1)*(x+y+z+1)/(x*y*z)", "(x+z+1)*(x+y+z+1)*(z+1)*(y+z)/(x*y*z)"};
  int maps = 0;
  for (int i = 0; i < 20; ++i) {
    auto f = LaurentPolynomial::parse(models[i % 4]);
    MonomialMap m = MonomialMap::identity(3);
    m.matrix = random_unimodular(rng);
    if (m.determinant() != 1 && m.determinant() != -1) {
      o.expect(false, "unimodular map");
      continue;
    }
    auto g = f.substitute_monomial(m);
    o.expect(period_sequence(g, 30).coefficients == period_sequence(f, 30).coefficients,
             std::string("period invariance for ") + models[i % 4]);
    ++maps;
  }
  o.notes.push_back("(i) " + std::to_string(maps) + " maps");

  int operators = 0;
  for (const auto& rec : catalog()) {
    if (!rec.lg) continue;
    const auto& v = verdict(rec.id);
    if (!v.picard_fuchs) continue;
    ++operators;
    o.expect(fuchs_relation_check(*v.picard_fuchs), "Fuchs relation for " + rec.id);
    auto f = specialize_family(rec, {}) - LaurentPolynomial::constant(rec.period_shift);
    auto longer = period_sequence(f, v.period_terms + 19);
    o.expect(annihilates(*v.picard_fuchs, longer), "guard re-verification for " + rec.id);
  }
  o.notes.push_back("(ii, v) " + std::to_string(operators) + " operators");

  std::vector<std::string> vars{"x", "y", "z", "t"};
  std::uniform_int_distribution<int> small(-3, 3);
  auto random_form = [&](int degree) {
    Polynomial p(vars);
    while (p.is_zero()) {
      for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b)
          for (int c2 = 0; a + b + c2 <= degree; ++c2) {
            int k = small(rng);
            if (k == 0 || rng() % 3 == 0) continue;
            p += Polynomial::monomial(vars, {a, b, c2, degree - a - b - c2}, k);
          }
    }
    return p;
  };
  int roundtrips = 0;
  for (int i = 0; i < 200; ++i) {
    Polynomial prod = Polynomial::constant(vars, small(rng) == 0 ? 1 : 2);
    int total = 0;
    while (total < 4) {
      int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(2, 4 - total)));
      auto g = random_form(d);
      int e = (total + 2 * d <= 4 && rng() % 4 == 0) ? 2 : 1;
      prod *= g.pow(e);
      total += d * e;
      if (rng() % 3 == 0) break;
    }
    auto fac = factor_form(prod);
    auto back = fac.expand(vars);
    o.expect(back == prod, "factorization round-trip " + prod.to_string());
    ++roundtrips;
  }
  o.notes.push_back("(iii) " + std::to_string(roundtrips) + " products");

  int pencils = 0, checks = 0;
  std::uniform_int_distribution<int> num(-50, 50), den(1, 7);
  for (const auto& rec : catalog()) {
    if (!rec.lg) continue;
    QuarticPencil p;
    try {
      p = homogenize(specialize_family(rec, {}));
    } catch (const DomainError&) {
      continue;
    }
    ++pencils;
    auto base = base_locus(p);
    for (int k = 0; k < 10; ++k) {
      Rational lambda(num(rng), den(rng));
      lambda.canonicalize();
      for (const auto& [curve, m] : base.curves) {
        try {
          o.expect(member_multiplicity(p, curve, lambda) <= m, rec.id + " " + curve.label);
          ++checks;
        } catch (const UnsupportedError& e) {
          o.expect(false, rec.id + " " + curve.label + ": " + e.what());
        }
      }
    }
  }
  o.notes.push_back("(iv) " + std::to_string(pencils) + " pencils, " + std::to_string(checks) + " comparisons");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "cubic periods against closed form and brute force", cubic_periods},
      {2, "Picard-Fuchs recovery for 1-13 from 60 terms", pf_113},
      {3, "Picard-Fuchs recovery for 1-7", pf_17},
      {4, "indicial data for 1-13 at inf and 1-7 over 4", indicial},
      {5, "2-12 pencil bookkeeping at a = 2", pencil_212},
      {6, "1-6 pencil bookkeeping at lambda = 0", pencil_16},
      {7, "non-reduced fibers and verdicts", nonreduced},
      {8, "unipotent monodromy for 1-8", unipotent_18},
      {9, "parameter sweeps for 2-12 and 3-2", sweeps},
      {10, "property suites", properties},
  };
  int failed = 0;
  auto start = Clock::now();
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << " (" << std::fixed
         << std::setprecision(1) << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "        " << n << "\n";
    std::cout.flush();
    if (!o.pass) ++failed;
  }
  double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << (failed ? "FAIL" : "PASS") << "  " << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria in " << std::fixed << std::setprecision(1) << total << " s\n";
  return failed ? 1 : 0;
}
