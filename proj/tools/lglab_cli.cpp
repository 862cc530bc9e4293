#include "lglab.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

using json = nlohmann::json;

namespace {

struct Flags {
  std::string expr;
  std::string family;
  std::vector<std::string> params;
  std::vector<std::string> grid;
  int terms = 0;
  int max_order = 0;
  int max_degree = 12;
  int guard = 20;
  std::string at;
  std::string fiber;
  std::string shift;
  std::string annotations;
  std::string catalog;
  bool json = false;
  bool pencil_only = false;
  std::uint64_t seed = 0;
};

struct Failure {
  int code;
};

int exit_code(lglab_status s) {
  switch (s) {
    case LGLAB_ERR_NOT_FOUND:
    case LGLAB_ERR_UNSUPPORTED:
    case LGLAB_ERR_INTERNAL:
      return 1;
    default:
      return 2;
  }
}

void check(lglab_status s, const std::string& input = {}) {
  if (s == LGLAB_OK) return;
  std::cerr << "error: " << lglab_last_error() << "\n";
  long pos = lglab_last_error_position();
  if (pos >= 0 && !input.empty()) {
    std::cerr << "  " << input << "\n  " << std::string(static_cast<std::size_t>(pos), ' ') << "^\n";
  }
  throw Failure{exit_code(s)};
}

struct Str {
  char* p = nullptr;
  ~Str() { lglab_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using Laurent = std::unique_ptr<lglab_laurent, void (*)(lglab_laurent*)>;
using Catalog = std::unique_ptr<lglab_catalog, void (*)(lglab_catalog*)>;
using Annotations = std::unique_ptr<lglab_annotations, void (*)(lglab_annotations*)>;
using Operator = std::unique_ptr<lglab_operator, void (*)(lglab_operator*)>;

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

std::string default_catalog() {
  if (const char* env = std::getenv("LGLAB_CATALOG"); env && *env) return env;
  return LGLAB_DEFAULT_CATALOG;
}

Catalog open_catalog(const Flags& f) {
  lglab_catalog* c = nullptr;
  check(lglab_catalog_load((f.catalog.empty() ? default_catalog() : f.catalog).c_str(), &c));
  return {c, lglab_catalog_free};
}

Annotations open_annotations(const Flags& f) {
  lglab_annotations* a = nullptr;
  check(lglab_annotations_load((f.annotations.empty() ? LGLAB_DEFAULT_ANNOTATIONS : f.annotations.c_str()), &a));
  return {a, lglab_annotations_free};
}

/// Polynomial from -e or --family; shift receives the family's period shift.
Laurent polynomial(const Flags& f, std::string& shift) {
  if (f.expr.empty() == f.family.empty()) {
    std::cerr << "error: give exactly one of --expr and --family\n";
    throw Failure{2};
  }
  auto params = c_strings(f.params);
  lglab_laurent* out = nullptr;
  if (!f.family.empty()) {
    auto cat = open_catalog(f);
    Str s;
    check(lglab_catalog_family(cat.get(), f.family.c_str(), params.data(), params.size(), &out, &s.p));
    shift = s.str();
    return {out, lglab_laurent_free};
  }
  std::vector<std::string> names;
  for (const auto& p : f.params) names.push_back(p.substr(0, p.find('=')));
  auto cnames = c_strings(names);
  lglab_laurent* parsed = nullptr;
  check(lglab_laurent_parse(f.expr.c_str(), cnames.data(), cnames.size(), &parsed), f.expr);
  Laurent g{parsed, lglab_laurent_free};
  if (names.empty()) return g;
  check(lglab_laurent_specialize(g.get(), params.data(), params.size(), &out));
  shift = "0";
  return {out, lglab_laurent_free};
}

lglab_search_options search(const Flags& f) {
  lglab_search_options o;
  lglab_search_options_init(&o);
  o.terms = f.terms;
  o.max_order = f.max_order;
  o.max_degree = f.max_degree;
  o.guard = f.guard;
  o.seed = f.seed;
  return o;
}

Operator picard_fuchs(const Flags& f) {
  std::string shift = "0";
  auto g = polynomial(f, shift);
  if (!f.shift.empty()) shift = f.shift;
  auto o = search(f);
  lglab_operator* op = nullptr;
  check(lglab_picard_fuchs(g.get(), &o, shift.c_str(), &op));
  return {op, lglab_operator_free};
}

std::string join(const json& arr, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out;
}

std::string text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i + 1 == r.size()) {
        out += r[i];
      } else {
        out += r[i] + std::string(width[i] - r[i].size() + 2, ' ');
      }
    }
    std::cout << out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void field(const std::string& key, const std::string& value) {
  std::cout << std::left << std::setw(20) << key + ":" << value << "\n";
}

void print_period(const json& j) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back({std::to_string(i), j[i].get<std::string>()});
  table({"j", "c_j"}, rows);
}

void print_operator(const json& j) {
  field("operator", text(j["operator"]));
  field("order", text(j["order"]));
  field("degree", text(j["degree"]));
  field("terms", text(j["terms"]));
  field("period shift", text(j["period_shift"]));
}

void print_points(const json& points) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : points)
    rows.push_back({text(p["t"]), text(p["fiber"]), text(p["kind"]), join(p["exponents"]), text(p["class"])});
  table({"t", "lambda", "kind", "exponents", "class"}, rows);
}

void print_monodromy(const json& j) {
  field("operator", text(j["operator"]));
  field("period shift", text(j["period_shift"]));
  field("fuchs relation", text(j["fuchs_relation"]));
  std::cout << "\n";
  print_points(j["points"]);
}

void print_pencil(const json& j) {
  field("F", text(j["F"]));
  field("certified", text(j["certified"]));
  field("fixed points", join(j["fixed_points"]));
  if (!j["singular_lines"].empty()) field("singular lines", join(j["singular_lines"]));
  std::cout << "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : j["curves"]) rows.push_back({text(c["label"]), text(c["form"]), text(c["m"])});
  table({"curve", "form", "m"}, rows);
}

void print_fiber(const json& j) {
  field("lambda", text(j["lambda"]));
  field("rho", text(j["rho"]));
  field("automated rho", text(j["automated_rho"]));
  field("reduced", text(j["reduced"]));
  if (!j["reduced"].get<bool>()) field("non-reduced", text(j["nonreduced_reason"]));
  if (j["incomplete"].get<bool>()) field("incomplete", "true");
  std::vector<std::string> comps;
  for (const auto& c : j["components"]) {
    auto s = "(" + text(c["factor"]) + ")";
    if (c["multiplicity"].get<int>() > 1) s += "^" + text(c["multiplicity"]);
    comps.push_back(s);
  }
  field("components", join(json(comps), ""));
  for (const auto& p : j["points"]) field("point " + text(p["point"]), "d = " + text(p["d"]) + " (" + text(p["source"]) + ")");
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : j["curves"]) rows.push_back({text(c["label"]), text(c["m"]), text(c["M"]), text(c["C"])});
  if (!rows.empty()) {
    std::cout << "\n";
    table({"curve", "m", "M", "C"}, rows);
  }
}

std::string assignment(const json& params) {
  std::string out;
  for (const auto& [k, v] : params.items()) out += (out.empty() ? "" : ", ") + k + "=" + v.get<std::string>();
  return out.empty() ? "-" : out;
}

void print_verdict(const json& j) {
  field("family", text(j["family"]));
  field("parameters", assignment(j["parameters"]));
  field("rational", text(j["rational"]));
  field("status", text(j["status"]));
  if (!j["nonreduced"].is_null())
    field("non-reduced fiber", text(j["nonreduced"]["lambda"]) + " (" + text(j["nonreduced"]["factor"]) + ")^" +
                                   text(j["nonreduced"]["multiplicity"]));
  if (!j["picard_fuchs"].is_null()) field("operator", text(j["picard_fuchs"]));
  field("period terms", text(j["period_terms"]));
  field("period shift", text(j["period_shift"]));
  std::vector<std::string> red;
  for (const auto& f : j["fibers"]) red.push_back(text(f["lambda"]) + " (rho " + text(f["rho"]) + ")");
  field("reducible fibers", red.empty() ? "-" : join(json(red)));
  field("all unipotent", text(j["all_unipotent"]));
  field("consistent", text(j["theorem2_consistent"]));
  if (!j["theorem1_check"].is_null()) {
    const auto& h = j["theorem1_check"];
    field("hodge check", text(h["sum"]) + " / " + text(h["expected"]) + " " + text(h["flag"]));
  }
  for (const auto& d : j["diagnostics"]) field("note", text(d));
  if (!j["monodromy"].empty()) {
    std::cout << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& m : j["monodromy"])
      rows.push_back({text(m["lambda"]), text(m["operator_point"]), join(m["exponents"]), text(m["class"])});
    table({"lambda", "t", "exponents", "class"}, rows);
  }
}

void print_sweep(const json& j) {
  field("family", text(j["family"]));
  field("constant", text(j["constant"]));
  std::cout << "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : j["points"]) {
    std::string note = p["wall"].get<bool>() ? "wall" : "";
    if (!p["violated"].empty()) note += " (" + join(p["violated"]) + ")";
    rows.push_back({assignment(p["parameters"]), text(p["status"]), join(p["reducible"]), note, text(p["signature"])});
  }
  table({"parameters", "status", "reducible", "wall", "signature"}, rows);
}

void print_catalog(const json& j) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j)
    rows.push_back({text(r["id"]), text(r["degree"]), text(r["h12"]), text(r["rational"]), text(r["lg"])});
  table({"id", "degree", "h12", "rational", "lg"}, rows);
}

void emit(const Flags& f, const std::string& out, void (*render)(const json&)) {
  if (f.json) {
    std::cout << out;
  } else {
    render(json::parse(out));
  }
}

int run_period(const Flags& f) {
  std::string shift = "0";
  auto g = polynomial(f, shift);
  if (!f.shift.empty()) shift = f.shift;
  Str out;
  check(lglab_period_json(g.get(), f.terms > 0 ? f.terms : 10, shift.c_str(), &out.p));
  emit(f, out.str(), print_period);
  return 0;
}

int run_pf(const Flags& f) {
  auto op = picard_fuchs(f);
  Str out;
  check(lglab_operator_json(op.get(), &out.p));
  emit(f, out.str(), print_operator);
  return 0;
}

int run_monodromy(const Flags& f) {
  auto op = picard_fuchs(f);
  Str out;
  check(lglab_monodromy_json(op.get(), f.at.empty() ? nullptr : f.at.c_str(),
                             f.fiber.empty() ? nullptr : f.fiber.c_str(), &out.p));
  emit(f, out.str(), print_monodromy);
  return 0;
}

int run_pencil(const Flags& f) {
  std::string shift;
  auto g = polynomial(f, shift);
  Str out;
  check(lglab_pencil_json(g.get(), &out.p));
  emit(f, out.str(), print_pencil);
  return 0;
}

int run_fiber(const Flags& f) {
  std::string shift;
  auto g = polynomial(f, shift);
  auto ann = open_annotations(f);
  Str out;
  std::string lambda = f.fiber.empty() ? (f.at.empty() ? "0" : f.at) : f.fiber;
  check(lglab_fiber_json(g.get(), lambda.c_str(), ann.get(), f.family.empty() ? nullptr : f.family.c_str(),
                         &out.p));
  emit(f, out.str(), print_fiber);
  return 0;
}

int run_classify(const Flags& f) {
  if (f.family.empty()) {
    std::cerr << "error: classify needs --family\n";
    return 2;
  }
  auto cat = open_catalog(f);
  auto ann = open_annotations(f);
  auto params = c_strings(f.params);
  auto o = search(f);
  Str out;
  int indeterminate = 0;
  check(lglab_classify_json(cat.get(), f.family.c_str(), params.data(), params.size(), &o, ann.get(), &out.p,
                            &indeterminate));
  emit(f, out.str(), print_verdict);
  return indeterminate ? 3 : 0;
}

int run_sweep(const Flags& f) {
  if (f.family.empty()) {
    std::cerr << "error: sweep needs --family\n";
    return 2;
  }
  auto cat = open_catalog(f);
  auto ann = open_annotations(f);
  auto axes = f.grid;
  for (const auto& p : f.params) axes.push_back(p);
  auto caxes = c_strings(axes);
  auto o = search(f);
  Str out;
  check(lglab_sweep_json(cat.get(), f.family.c_str(), caxes.data(), caxes.size(), &o, ann.get(), !f.pencil_only,
                         &out.p));
  emit(f, out.str(), print_sweep);
  return 0;
}

int run_catalog(const Flags& f) {
  auto cat = open_catalog(f);
  Str out;
  check(lglab_catalog_list_json(cat.get(), &out.p));
  emit(f, out.str(), print_catalog);
  return 0;
}

void shared(CLI::App* sub, Flags& f) {
  sub->add_option("-e,--expr", f.expr, "Laurent polynomial");
  sub->add_option("--family", f.family, "catalog family id");
  sub->add_option("--param", f.params, "parameter value name=q")->take_all();
  sub->add_option("-n,--terms", f.terms, "number of period terms")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-order", f.max_order, "operator order bound (0: staged search)")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-degree", f.max_degree, "operator degree bound")->check(CLI::NonNegativeNumber);
  sub->add_option("--guard", f.guard, "extra verification terms")->check(CLI::NonNegativeNumber);
  sub->add_option("--at", f.at, "operator point t (rational or inf)");
  sub->add_option("--fiber", f.fiber, "fiber value lambda");
  sub->add_option("--shift", f.shift, "period of f - shift");
  sub->add_option("--annotations", f.annotations, "point annotation file");
  sub->add_option("--catalog", f.catalog, "catalog file");
  sub->add_option("--seed", f.seed, "random seed");
  sub->add_flag("--json", f.json, "JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for Landau-Ginzburg models of Fano threefolds", "lglab"};
  app.require_subcommand(1);
  Flags f;
  std::vector<std::pair<CLI::App*, int (*)(const Flags&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Flags&)) {
    auto* sub = app.add_subcommand(name, help);
    shared(sub, f);
    commands.emplace_back(sub, fn);
    return sub;
  };
  add("period", "period sequence", run_period);
  add("pf", "Picard-Fuchs operator", run_pf);
  add("monodromy", "local exponents and monodromy class", run_monodromy);
  add("pencil", "quartic pencil and base locus", run_pencil);
  add("fiber", "fiber components and rho", run_fiber);
  add("classify", "verdict for a catalog family", run_classify);
  auto* sweep = add("sweep", "parameter sweep", run_sweep);
  sweep->add_option("--grid", f.grid, "axis name=v1,v2,...")->take_all();
  sweep->add_flag("--pencil-only", f.pencil_only, "compare pencil data only");
  add("catalog-list", "list catalog records", run_catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) return fn(f);
  } catch (const Failure& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
