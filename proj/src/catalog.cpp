#include "lglab/catalog.hpp"

#include "lglab/error.hpp"
#include "lglab/factor.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

namespace lglab {

using json = nlohmann::json;

std::string to_string(Rationality r) {
  switch (r) {
    case Rationality::Rational: return "rational";
    case Rationality::NonRational: return "non-rational";
    case Rationality::GenericallyRational: return "generically-rational";
    case Rationality::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(VerdictStatus s) { return s == VerdictStatus::Determined ? "determined" : "indeterminate"; }

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Error invalid(const std::string& where, const std::string& what) { return Error(ErrorCode::Invalid, where + ": " + what); }

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw invalid(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_string()) throw invalid(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_array()) throw invalid(where, std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw invalid(where, std::string("field '") + key + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::optional<int> optional_int(const json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw invalid(where, std::string("field '") + key + "' must be a non-negative integer or null");
  return v.get<int>();
}

Rational rational_text(const std::string& s, const std::string& where) {
  try {
    return parse_rational(s);
  } catch (const ParseError& e) {
    throw invalid(where, "bad rational '" + s + "'");
  }
}

Rationality parse_rationality(const json& v, const std::string& where) {
  if (v.is_null()) return Rationality::Unknown;
  if (v.is_string()) {
    auto s = v.get<std::string>();
    if (s == "rational") return Rationality::Rational;
    if (s == "non-rational") return Rationality::NonRational;
    if (s == "generically-rational") return Rationality::GenericallyRational;
  }
  throw invalid(where, "field 'rational' must be rational, non-rational, generically-rational or null");
}

std::pair<std::string, std::string> split_relation(const std::string& rel) {
  auto pos = rel.find('=');
  if (pos == std::string::npos || rel.find('=', pos + 1) != std::string::npos)
    throw ParameterError("relation '" + rel + "' must have the form lhs=rhs");
  return {rel.substr(0, pos), rel.substr(pos + 1)};
}

Rational evaluate_side(const std::string& text, const std::vector<std::string>& params, const ParameterAssignment& values) {
  auto side = LaurentPolynomial::parse(text, params);
  if (side.torus_dimension() != 0) throw ParameterError("relation side '" + text + "' involves non-parameters");
  std::vector<Rational> point;
  for (const auto& v : side.variables()) {
    auto it = values.find(v);
    if (it == values.end()) throw ParameterError("missing value for parameter '" + v + "'");
    point.push_back(it->second);
  }
  return side.numerator().evaluate(point);
}

FamilyRecord parse_record(const json& obj, std::size_t index) {
  std::string where = "catalog record " + std::to_string(index);
  if (!obj.is_object()) throw invalid(where, "not an object");
  FamilyRecord r;
  r.id = string_field(obj, "id", where);
  where = "catalog record " + r.id;
  static const std::regex family_id(R"(([1-9][0-9]*)-([1-9][0-9]*))");
  static const std::regex demo_id(R"(demo-[a-z0-9-]+)");
  std::smatch m;
  bool is_family = std::regex_match(r.id, m, family_id);
  if (!is_family && !std::regex_match(r.id, demo_id)) throw invalid(where, "id must be 'm-n' or 'demo-...'");
  static const std::set<std::string> known{"id", "degree", "h12", "rational", "lg", "parameters", "parameter_count",
                                           "default_parameters", "bad_parameters", "period_shift", "references",
                                           "provenance"};
  for (const auto& [k, v] : obj.items())
    if (!known.count(k)) throw invalid(where, "unknown field '" + k + "'");
  r.degree = optional_int(obj, "degree", where);
  r.h12 = optional_int(obj, "h12", where);
  r.rational = parse_rationality(field(obj, "rational", where), where);
  r.parameters = string_list(obj, "parameters", where);
  const auto& pc = field(obj, "parameter_count", where);
  if (!pc.is_number_integer() || pc.get<long long>() < 0) throw invalid(where, "parameter_count must be a non-negative integer");
  r.parameter_count = pc.get<int>();
  if (is_family && r.parameter_count != std::stoi(m[1].str()) - 1)
    throw invalid(where, "parameter_count must equal the Picard rank minus one");
  const auto& dp = field(obj, "default_parameters", where);
  if (!dp.is_object()) throw invalid(where, "default_parameters must be an object");
  for (const auto& [k, v] : dp.items()) {
    if (std::find(r.parameters.begin(), r.parameters.end(), k) == r.parameters.end())
      throw invalid(where, "default for undeclared parameter '" + k + "'");
    if (!v.is_string()) throw invalid(where, "default values must be rational strings");
    r.default_parameters[k] = rational_text(v.get<std::string>(), where);
  }
  r.bad_parameters = string_list(obj, "bad_parameters", where);
  r.period_shift = rational_text(string_field(obj, "period_shift", where), where);
  r.references = string_list(obj, "references", where);
  const auto& prov = field(obj, "provenance", where);
  if (!prov.is_object()) throw invalid(where, "provenance must be an object");
  for (const auto& [k, v] : prov.items()) {
    if (!v.is_string()) throw invalid(where, "provenance values must be strings");
    r.provenance[k] = v.get<std::string>();
  }
  const auto& lg = field(obj, "lg", where);
  if (!lg.is_null()) {
    if (!lg.is_string()) throw invalid(where, "lg must be a string or null");
    r.lg_text = lg.get<std::string>();
    try {
      r.lg = LaurentPolynomial::parse(*r.lg_text, r.parameters);
    } catch (const Error& e) {
      throw invalid(where, std::string("lg: ") + e.what());
    }
    if (r.lg->torus_dimension() == 0) throw invalid(where, "lg has no torus variables");
    if (r.lg->parameters().size() != r.parameters.size()) throw invalid(where, "lg parameters do not match the declaration");
  }
  for (const auto& rel : r.bad_parameters) {
    try {
      auto [lhs, rhs] = split_relation(rel);
      LaurentPolynomial::parse(lhs, r.parameters);
      LaurentPolynomial::parse(rhs, r.parameters);
    } catch (const Error& e) {
      throw invalid(where, "bad_parameters: " + std::string(e.what()));
    }
  }
  if (r.lg && !r.parameters.empty()) {
    try {
      resolve_parameters(r, {});
    } catch (const Error& e) {
      throw invalid(where, std::string("default_parameters: ") + e.what());
    }
  }
  return r;
}

Annotation parse_annotation(const json& obj, std::size_t index) {
  std::string where = "annotation " + std::to_string(index);
  if (!obj.is_object()) throw invalid(where, "not an object");
  Annotation a;
  a.family = string_field(obj, "family", where);
  a.lambda = rational_text(string_field(obj, "lambda", where), where);
  const auto& pt = field(obj, "point", where);
  if (!pt.is_array() || pt.size() != 4) throw invalid(where, "point must list four coordinates");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!pt[i].is_string()) throw invalid(where, "coordinates must be rational strings");
    a.point[i] = rational_text(pt[i].get<std::string>(), where);
  }
  if (std::all_of(a.point.begin(), a.point.end(), [](const Rational& c) { return c == 0; }))
    throw invalid(where, "point must be nonzero");
  a.point = normalize_point(a.point);
  const auto& d = field(obj, "d", where);
  if (!d.is_number_integer() || d.get<long long>() < 0) throw invalid(where, "d must be a non-negative integer");
  a.d_value = d.get<int>();
  a.source = string_field(obj, "source", where);
  return a;
}

// Discriminant in lambda of (A - lambda B) restricted to a line, by sampling.
UPoly line_discriminant(const UPoly& A, const UPoly& B) {
  int n = std::max(A.degree(), B.degree());
  if (n < 2) return {};
  std::vector<Rational> xs, vs;
  for (long k = 0; static_cast<int>(xs.size()) < 2 * n; ++k) {
    Rational lam(k);
    UPoly h = A - B * lam;
    if (h.degree() < n) continue;
    xs.push_back(lam);
    vs.push_back(resultant(h, h.derivative()));
  }
  return interpolate(xs, vs);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string exponent_text(const std::vector<Rational>& e) {
  std::vector<std::string> s;
  for (const auto& x : e) s.push_back(to_string(x));
  return "{" + join(s, ", ") + "}";
}

struct Pipeline {
  Verdict verdict;
  std::optional<QuarticPencil> pencil;
};

void settle_theorem2(Verdict& v, bool has_reducible) {
  if (v.status != VerdictStatus::Determined) return;
  if (v.rational == Rationality::Unknown) {
    v.status = VerdictStatus::Indeterminate;
    v.diagnostics.push_back("rationality of the family is not recorded");
    return;
  }
  bool rational = v.rational != Rationality::NonRational;
  v.theorem2_consistent = rational == (!has_reducible || v.all_unipotent);
}

FiberMonodromy fiber_monodromy(const Verdict& v, const DifferentialOperator& L, const Rational& lambda) {
  FiberMonodromy fm;
  fm.lambda = lambda;
  fm.operator_point = operator_point(SingularPoint::at(lambda), v.period_shift);
  for (const auto& p : v.points) {
    if (!p.point.same_location(fm.operator_point)) continue;
    fm.operator_point = p.point;
    if (p.indicial) fm.exponents = p.indicial->exponents;
    fm.monodromy = p.monodromy;
    return fm;
  }
  try {
    auto d = indicial_polynomial(L, fm.operator_point);
    fm.exponents = d.exponents;
    fm.monodromy = classify_point(d);
    fm.monodromy.justification = "ordinary point of the operator; " + fm.monodromy.justification;
  } catch (const UnsupportedError& e) {
    fm.monodromy = {MonodromyTag::Indeterminate, e.what()};
  }
  return fm;
}

std::optional<DifferentialOperator> search_operator(const LaurentPolynomial& f, const ClassifyOptions& o, Verdict& v) {
  try {
    auto r = search_picard_fuchs(f, o.stages, o.period_length);
    v.period_terms = static_cast<int>(r.periods.length());
    return r.op;
  } catch (const NotFoundError& e) {
    v.diagnostics.push_back(e.what());
  } catch (const DomainError& e) {
    v.diagnostics.push_back(e.what());
  }
  return std::nullopt;
}

Pipeline run_pipeline(const FamilyRecord& rec, const ParameterAssignment& params, const LaurentPolynomial& f,
                      const ClassifyOptions& o) {
  Pipeline out;
  Verdict& v = out.verdict;
  v.family = rec.id;
  v.parameters = params;
  v.rational = rec.rational;
  v.period_shift = rec.period_shift;

  auto nonreduced = find_nonreduced_fibers(f, o.seed);
  if (!nonreduced.empty()) {
    const auto& nr = nonreduced.front();
    v.nonreduced = nr;
    FiberMonodromy fm;
    fm.lambda = nr.lambda;
    fm.operator_point = operator_point(SingularPoint::at(nr.lambda), rec.period_shift);
    fm.monodromy = {MonodromyTag::QuasiUnipotentNonUnipotent,
                    "fiber over " + to_string(nr.lambda) + " has a component of multiplicity " +
                        std::to_string(nr.component.multiplicity) + "; its monodromy has eigenvalues of order " +
                        std::to_string(nr.component.multiplicity)};
    v.monodromy.push_back(fm);
    v.all_unipotent = false;
    v.status = VerdictStatus::Determined;
    settle_theorem2(v, true);
    return out;
  }

  auto shifted = f - LaurentPolynomial::constant(rec.period_shift);
  auto L = search_operator(shifted, o, v);
  if (L) {
    v.picard_fuchs = *L;
    v.points = analyze_operator(*L);
  }

  try {
    out.pencil = homogenize(f);
  } catch (const DomainError& e) {
    v.diagnostics.push_back(std::string("no quartic pencil: ") + e.what());
    v.status = VerdictStatus::Indeterminate;
    return out;
  }

  std::set<Rational> candidates{Rational(0), rec.period_shift};
  for (const auto& p : v.points) {
    auto fp = fiber_point(p.point, rec.period_shift);
    if (fp.location == SingularPoint::Location::Rational) candidates.insert(fp.value);
  }
  std::vector<Annotation> notes;
  for (const auto& a : o.annotations)
    if (a.family == rec.id) notes.push_back(a);
  for (const auto& lam : candidates) {
    auto rep = fiber_report(*out.pencil, lam, notes);
    if (rep.rho > 1 || !rep.reduced) v.fibers.push_back(std::move(rep));
  }

  if (!L) {
    v.status = VerdictStatus::Indeterminate;
    return out;
  }
  v.status = VerdictStatus::Determined;
  for (const auto& rep : v.fibers) {
    auto fm = fiber_monodromy(v, *L, rep.lambda);
    if (fm.monodromy.tag != MonodromyTag::Unipotent) v.all_unipotent = false;
    if (fm.monodromy.tag == MonodromyTag::Indeterminate) {
      v.status = VerdictStatus::Indeterminate;
      v.diagnostics.push_back("monodromy over " + to_string(rep.lambda) + " undetermined: " + fm.monodromy.justification);
    }
    v.monodromy.push_back(std::move(fm));
  }
  if (rec.h12) v.theorem1_check = hodge_check(rec, v.fibers, o.annotations_complete);
  settle_theorem2(v, !v.fibers.empty());
  return out;
}

}  // namespace

std::vector<FamilyRecord> parse_catalog(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Invalid, std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::Invalid, "catalog must be a JSON array");
  std::vector<FamilyRecord> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    auto r = parse_record(doc[i], i);
    if (!seen.insert(r.id).second) throw invalid("catalog record " + r.id, "duplicate id");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<FamilyRecord> load_catalog(const std::string& path) { return parse_catalog(read_file(path)); }

const FamilyRecord& find_family(const std::vector<FamilyRecord>& catalog, const std::string& id) {
  for (const auto& r : catalog)
    if (r.id == id) return r;
  throw ParameterError("unknown family '" + id + "'");
}

std::vector<Annotation> AnnotationSet::for_family(const std::string& id) const {
  std::vector<Annotation> out;
  for (const auto& a : annotations)
    if (a.family == id) out.push_back(a);
  return out;
}

AnnotationSet parse_annotations(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Invalid, std::string("annotations are not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::Invalid, "annotations must be a JSON object");
  AnnotationSet out;
  const auto& list = field(doc, "annotations", "annotations");
  if (!list.is_array()) throw Error(ErrorCode::Invalid, "annotations: field 'annotations' must be an array");
  for (std::size_t i = 0; i < list.size(); ++i) out.annotations.push_back(parse_annotation(list[i], i));
  if (doc.contains("partial")) {
    for (const auto& id : string_list(doc, "partial", "annotations")) out.partial.insert(id);
  }
  return out;
}

AnnotationSet load_annotations(const std::string& path) { return parse_annotations(read_file(path)); }

std::vector<std::string> violated_relations(const FamilyRecord& rec, const ParameterAssignment& values) {
  std::vector<std::string> out;
  for (const auto& rel : rec.bad_parameters) {
    auto [lhs, rhs] = split_relation(rel);
    if (evaluate_side(lhs, rec.parameters, values) == evaluate_side(rhs, rec.parameters, values)) out.push_back(rel);
  }
  return out;
}

ParameterAssignment resolve_parameters(const FamilyRecord& rec, const ParameterAssignment& given) {
  ParameterAssignment out = rec.default_parameters;
  for (const auto& [k, v] : given) {
    if (std::find(rec.parameters.begin(), rec.parameters.end(), k) == rec.parameters.end())
      throw ParameterError("family " + rec.id + " has no parameter '" + k + "'");
    out[k] = v;
  }
  for (const auto& p : rec.parameters)
    if (!out.count(p)) throw ParameterError("family " + rec.id + ": missing value for parameter '" + p + "'");
  return out;
}

LaurentPolynomial specialize_family(const FamilyRecord& rec, const ParameterAssignment& given, bool allow_bad) {
  if (!rec.lg) throw DomainError("family " + rec.id + " has no Laurent polynomial");
  auto values = resolve_parameters(rec, given);
  auto bad = violated_relations(rec, values);
  if (!bad.empty() && !allow_bad) throw ParameterError("family " + rec.id + ": parameters satisfy excluded relation " + bad.front());
  if (rec.parameters.empty()) return *rec.lg;
  return rec.lg->specialize(values);
}

std::vector<NonreducedFiber> find_nonreduced_fibers(const LaurentPolynomial& f, std::uint64_t seed) {
  if (f.has_parameters()) throw ParameterError("non-reduced fiber search requires specialized parameters");
  const auto& num = f.numerator();
  const auto& vars = f.variables();
  std::size_t n = vars.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-9, 9);
  std::vector<std::string> line_var{"s"};
  std::set<Rational> candidates;
  int lines = 0;
  for (int attempt = 0; attempt < 16 && lines < 3; ++attempt) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
      int p = pick(rng), q = 0;
      while (q == 0) q = pick(rng);
      images.push_back(Polynomial::constant(line_var, p) + Polynomial::variable(line_var, 0) * Rational(q));
    }
    UPoly A = to_upoly(num.substitute(images), 0);
    Polynomial den = Polynomial::constant(line_var, 1);
    for (std::size_t i = 0; i < n; ++i) den *= images[i].pow(static_cast<unsigned>(f.denominator()[i]));
    UPoly B = to_upoly(den, 0);
    UPoly disc = line_discriminant(A, B);
    if (disc.is_zero()) continue;
    auto roots = rational_roots(disc);
    candidates.insert(roots.begin(), roots.end());
    ++lines;
  }
  std::vector<NonreducedFiber> out;
  for (const auto& lam : candidates)
    if (auto c = detect_nonreduced_torus(f, lam)) out.push_back({lam, *c});
  return out;
}

HodgeCheck hodge_check(const FamilyRecord& rec, const std::vector<FiberReport>& fibers, bool annotations_complete) {
  if (!rec.h12) throw DomainError("family " + rec.id + " has no recorded h12");
  HodgeCheck h;
  h.expected = *rec.h12;
  bool complete = annotations_complete;
  for (const auto& f : fibers) {
    h.sum += f.rho - 1;
    if (f.incomplete) complete = false;
  }
  if (complete)
    h.flag = h.sum == h.expected ? "match" : "mismatch";
  else
    h.flag = h.sum <= h.expected ? "lower-bound" : "mismatch";
  return h;
}

Verdict classify_family(const FamilyRecord& rec, const ClassifyOptions& options) {
  if (!rec.lg) {
    Verdict v;
    v.family = rec.id;
    v.rational = rec.rational;
    v.period_shift = rec.period_shift;
    v.diagnostics.push_back("no Laurent polynomial recorded; see " + join(rec.references, "; "));
    return v;
  }
  auto params = resolve_parameters(rec, options.parameters);
  auto f = specialize_family(rec, params);
  return run_pipeline(rec, params, f, options).verdict;
}

std::string base_locus_signature(const BaseLocusReport& r) {
  std::vector<std::string> parts;
  for (const auto& [c, m] : r.curves) parts.push_back(c.label + "*" + std::to_string(m));
  std::string out = join(parts, ", ");
  for (const auto& s : r.hyperplane_sections) {
    std::vector<std::string> comps;
    for (const auto& [label, e] : s.components) comps.push_back(std::to_string(e) + " " + label);
    out += "; H{" + pencil_variables()[s.hyperplane] + "} = " + join(comps, " + ");
  }
  return out;
}

SweepReport parameter_sweep(const FamilyRecord& rec, const std::vector<ParameterAssignment>& grid,
                            const SweepOptions& options) {
  if (rec.parameter_count < 1 || rec.parameters.empty())
    throw DomainError("family " + rec.id + " has no parameters to sweep");
  SweepReport out;
  out.family = rec.id;
  for (const auto& given : grid) {
    SweepPoint sp;
    sp.parameters = resolve_parameters(rec, given);
    sp.violated = violated_relations(rec, sp.parameters);
    auto f = specialize_family(rec, sp.parameters, true);
    std::optional<QuarticPencil> pencil;
    try {
      pencil = homogenize(f);
      sp.base_locus = base_locus_signature(base_locus(*pencil));
    } catch (const DomainError& e) {
      sp.base_locus = std::string("no quartic pencil: ") + e.what();
    }
    if (options.monodromy) {
      auto run = run_pipeline(rec, sp.parameters, f, options.classify);
      sp.status = run.verdict.status;
      sp.diagnostics = run.verdict.diagnostics;
      sp.monodromy = run.verdict.monodromy;
      if (run.verdict.nonreduced) sp.reducible.push_back(run.verdict.nonreduced->lambda);
      for (const auto& rep : run.verdict.fibers) sp.reducible.push_back(rep.lambda);
    } else if (pencil) {
      sp.status = VerdictStatus::Determined;
      for (const auto& lam : options.lambdas) {
        auto rep = fiber_report(*pencil, lam, options.classify.annotations);
        if (rep.rho > 1 || !rep.reduced) sp.reducible.push_back(lam);
      }
    }
    std::vector<std::string> red;
    for (const auto& r : sp.reducible) red.push_back(to_string(r));
    std::string sig = "reducible {" + join(red, ", ") + "}";
    if (options.monodromy) {
      for (const auto& m : sp.monodromy)
        sig += "; " + to_string(m.lambda) + ": " + exponent_text(m.exponents) + " " + to_string(m.monodromy.tag);
    } else {
      sig = sp.base_locus + "; " + sig;
    }
    sp.signature = sig;
    out.points.push_back(std::move(sp));
  }
  std::map<std::string, int> counts;
  std::vector<std::string> order;
  for (const auto& p : out.points) {
    if (!p.violated.empty()) continue;
    if (counts[p.signature]++ == 0) order.push_back(p.signature);
  }
  std::string modal;
  int best = 0;
  for (const auto& s : order)
    if (counts[s] > best) best = counts[s], modal = s;
  out.constant = order.size() <= 1;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    auto& p = out.points[i];
    p.wall = !p.violated.empty() || p.signature != modal;
    if (p.wall) out.walls.push_back(i);
  }
  return out;
}

}  // namespace lglab
