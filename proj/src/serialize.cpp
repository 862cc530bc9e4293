#include "serialize.hpp"

#include "lglab/error.hpp"

namespace lglab::io {

namespace {

json nullable(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json parameters(const ParameterAssignment& p) {
  json out = json::object();
  for (const auto& [k, v] : p) out[k] = to_string(v);
  return out;
}

json factors(const FactorizationResult& f) {
  json out = json::array();
  for (const auto& [g, e] : f.factors) out.push_back({{"factor", g.to_string()}, {"multiplicity", e}});
  return out;
}

json fiber_monodromy(const FiberMonodromy& m, const Rational& shift) {
  return {{"lambda", to_string(m.lambda)},
          {"operator_point", m.operator_point.label()},
          {"fiber", fiber_point(m.operator_point, shift).label("lambda")},
          {"exponents", rationals(m.exponents)},
          {"class", to_string(m.monodromy.tag)},
          {"justification", m.monodromy.justification}};
}

}  // namespace

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json period_report(const PeriodSequence& s) { return rationals(s.coefficients); }

json operator_report(const DifferentialOperator& L, int terms, const Rational& shift) {
  json coeffs = json::array();
  for (int i = 0; i <= L.order(); ++i) coeffs.push_back(rationals(L.coefficient(i).coeffs()));
  return {{"operator", L.to_string()}, {"order", L.order()},     {"degree", L.degree()},
          {"coefficients", coeffs},    {"terms", terms},         {"period_shift", to_string(shift)}};
}

json point_report(const PointAnalysis& p, const Rational& shift) {
  json out = {{"t", p.point.label()},
              {"fiber", fiber_point(p.point, shift).label("lambda")},
              {"kind", to_string(p.point.kind)},
              {"class", to_string(p.monodromy.tag)},
              {"justification", p.monodromy.justification}};
  if (p.indicial) {
    out["indicial"] = p.indicial->rational_form.to_string("y");
    out["exponents"] = rationals(p.indicial->exponents);
    json residual = json::array();
    for (const auto& r : p.indicial->residual) residual.push_back(r.to_string("y"));
    out["residual"] = residual;
  } else {
    out["indicial"] = nullptr;
    out["exponents"] = json::array();
    out["residual"] = json::array();
  }
  return out;
}

json monodromy_report(const DifferentialOperator& L, const std::vector<PointAnalysis>& points, const Rational& shift) {
  json pts = json::array();
  for (const auto& p : points) pts.push_back(point_report(p, shift));
  json out = {{"operator", L.to_string()}, {"period_shift", to_string(shift)}, {"points", pts}};
  try {
    out["fuchs_relation"] = fuchs_relation_check(L);
  } catch (const Error&) {
    out["fuchs_relation"] = nullptr;
  }
  return out;
}

json pencil_report(const QuarticPencil& p, const BaseLocusReport& base, const FixedSingularLocus& fixed) {
  json curves = json::array();
  for (const auto& [c, m] : base.curves)
    curves.push_back({{"label", c.label},
                      {"hyperplane", pencil_variables()[c.hyperplane]},
                      {"form", c.form.to_string()},
                      {"degree", c.degree()},
                      {"m", m}});
  json sections = json::array();
  for (const auto& s : base.hyperplane_sections) {
    json comps = json::array();
    for (const auto& [label, e] : s.components) comps.push_back({{"label", label}, {"multiplicity", e}});
    sections.push_back({{"hyperplane", pencil_variables()[s.hyperplane]}, {"components", comps}, {"certified", s.certified}});
  }
  json pts = json::array();
  for (const auto& q : fixed.points) pts.push_back(to_string(q));
  return {{"F", p.F.to_string()},         {"curves", curves},  {"hyperplane_sections", sections},
          {"certified", base.certified}, {"fixed_points", pts}, {"singular_lines", fixed.singular_lines}};
}

json fiber_report(const FiberReport& f) {
  json curves = json::array();
  for (const auto& c : f.curves)
    curves.push_back({{"label", c.curve.label}, {"m", c.m}, {"M", nullable(c.M)}, {"C", c.C}});
  json pts = json::array();
  for (const auto& a : f.points) pts.push_back({{"point", to_string(a.point)}, {"d", a.d_value}, {"source", a.source}});
  return {{"lambda", to_string(f.lambda)},
          {"components", factors(f.s_components)},
          {"curves", curves},
          {"points", pts},
          {"automated_rho", f.automated_rho},
          {"rho", f.rho},
          {"annotated", f.annotated},
          {"incomplete", f.incomplete},
          {"reduced", f.reduced},
          {"nonreduced_reason", f.nonreduced_reason}};
}

json verdict_report(const Verdict& v) {
  json out = {{"family", v.family},
              {"parameters", parameters(v.parameters)},
              {"rational", to_string(v.rational)},
              {"status", to_string(v.status)},
              {"diagnostics", v.diagnostics},
              {"period_terms", v.period_terms},
              {"period_shift", to_string(v.period_shift)},
              {"all_unipotent", v.all_unipotent},
              {"theorem2_consistent", v.theorem2_consistent}};
  if (v.nonreduced)
    out["nonreduced"] = {{"lambda", to_string(v.nonreduced->lambda)},
                         {"factor", v.nonreduced->component.factor.to_string()},
                         {"multiplicity", v.nonreduced->component.multiplicity}};
  else
    out["nonreduced"] = nullptr;
  out["picard_fuchs"] = v.picard_fuchs ? json(v.picard_fuchs->to_string()) : json(nullptr);
  json pts = json::array();
  for (const auto& p : v.points) pts.push_back(point_report(p, v.period_shift));
  out["points"] = pts;
  json fibers = json::array();
  for (const auto& f : v.fibers) fibers.push_back(fiber_report(f));
  out["fibers"] = fibers;
  json mono = json::array();
  for (const auto& m : v.monodromy) mono.push_back(fiber_monodromy(m, v.period_shift));
  out["monodromy"] = mono;
  if (v.theorem1_check)
    out["theorem1_check"] = {{"sum", v.theorem1_check->sum},
                             {"expected", v.theorem1_check->expected},
                             {"flag", v.theorem1_check->flag}};
  else
    out["theorem1_check"] = nullptr;
  return out;
}

json sweep_report(const SweepReport& s) {
  json pts = json::array();
  for (const auto& p : s.points) {
    json mono = json::array();
    for (const auto& m : p.monodromy) {
      mono.push_back({{"lambda", to_string(m.lambda)},
                      {"operator_point", m.operator_point.label()},
                      {"exponents", rationals(m.exponents)},
                      {"class", to_string(m.monodromy.tag)}});
    }
    pts.push_back({{"parameters", parameters(p.parameters)},
                   {"violated", p.violated},
                   {"status", to_string(p.status)},
                   {"diagnostics", p.diagnostics},
                   {"reducible", rationals(p.reducible)},
                   {"monodromy", mono},
                   {"base_locus", p.base_locus},
                   {"signature", p.signature},
                   {"wall", p.wall}});
  }
  return {{"family", s.family}, {"constant", s.constant}, {"walls", s.walls}, {"points", pts}};
}

json catalog_report(const std::vector<FamilyRecord>& catalog) {
  json out = json::array();
  for (const auto& r : catalog) {
    json defaults = parameters(r.default_parameters);
    out.push_back({{"id", r.id},
                   {"degree", nullable(r.degree)},
                   {"h12", nullable(r.h12)},
                   {"rational", to_string(r.rational)},
                   {"lg", r.lg_text ? json(*r.lg_text) : json(nullptr)},
                   {"parameters", r.parameters},
                   {"parameter_count", r.parameter_count},
                   {"default_parameters", defaults},
                   {"bad_parameters", r.bad_parameters},
                   {"period_shift", to_string(r.period_shift)},
                   {"references", r.references}});
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace lglab::io
