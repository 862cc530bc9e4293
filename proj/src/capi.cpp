#include "lglab.h"

#include "lglab/catalog.hpp"
#include "lglab/error.hpp"
#include "serialize.hpp"

#include <cstring>
#include <new>

struct lglab_laurent {
  lglab::LaurentPolynomial f;
};

struct lglab_operator {
  lglab::DifferentialOperator op;
  lglab::Rational shift;
  int terms = 0;
};

struct lglab_catalog {
  std::vector<lglab::FamilyRecord> records;
};

struct lglab_annotations {
  lglab::AnnotationSet set;
};

namespace {

using namespace lglab;

thread_local std::string last_error;
thread_local long last_position = -1;

lglab_status fail(lglab_status s, const std::string& message, long position = -1) {
  last_error = message;
  last_position = position;
  return s;
}

template <class Fn>
lglab_status guarded(Fn&& fn) {
  last_error.clear();
  last_position = -1;
  try {
    fn();
    return LGLAB_OK;
  } catch (const ParseError& e) {
    return fail(LGLAB_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const Error& e) {
    return fail(static_cast<lglab_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LGLAB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LGLAB_ERR_INTERNAL, e.what());
  }
}

char* copy(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ParameterAssignment assignments(const char* const* items, std::size_t count) {
  ParameterAssignment out;
  for (std::size_t i = 0; i < count; ++i) {
    if (!items[i]) throw ParameterError("null assignment");
    std::string s = items[i];
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw ParameterError("expected name=value, got '" + s + "'");
    auto name = s.substr(0, eq);
    if (out.count(name)) throw ParameterError("parameter " + name + " given twice");
    out[name] = parse_rational(s.substr(eq + 1));
  }
  return out;
}

std::vector<PicardFuchsOptions> stages(const lglab_search_options* o) {
  if (!o || o->max_order <= 0) return ClassifyOptions{}.stages;
  if (o->max_degree < 0 || o->guard < 0) throw ParameterError("search bounds must be non-negative");
  return {{o->max_order, o->max_degree, o->guard}};
}

ClassifyOptions classify_options(const FamilyRecord& rec, const ParameterAssignment& given,
                                 const lglab_search_options* o, const lglab_annotations* ann) {
  ClassifyOptions opts;
  opts.parameters = given;
  opts.stages = stages(o);
  if (o) {
    if (o->terms < 0) throw ParameterError("terms must be non-negative");
    opts.period_length = o->terms;
    opts.seed = o->seed;
  }
  if (ann) {
    opts.annotations = ann->set.for_family(rec.id);
    opts.annotations_complete = ann->set.partial.count(rec.id) == 0;
  } else {
    opts.annotations_complete = false;
  }
  return opts;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::vector<ParameterAssignment> grid(const char* const* axes, std::size_t count) {
  std::vector<ParameterAssignment> out{{}};
  for (std::size_t i = 0; i < count; ++i) {
    if (!axes[i]) throw ParameterError("null axis");
    std::string s = axes[i];
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw ParameterError("expected name=v1,v2,..., got '" + s + "'");
    auto name = s.substr(0, eq);
    std::vector<ParameterAssignment> next;
    for (const auto& base : out) {
      if (base.count(name)) throw ParameterError("axis " + name + " given twice");
      for (const auto& v : split(s.substr(eq + 1), ',')) {
        auto p = base;
        p[name] = parse_rational(v);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

#define REQUIRE_ARG(p) \
  if (!(p)) return fail(LGLAB_ERR_NULL, "null argument: " #p)

}  // namespace

extern "C" {

void lglab_search_options_init(lglab_search_options* options) {
  if (options) *options = {0, 0, 0, 20, 0};
}

const char* lglab_last_error(void) { return last_error.c_str(); }
long lglab_last_error_position(void) { return last_position; }
void lglab_string_free(char* s) { delete[] s; }

lglab_status lglab_laurent_parse(const char* text, const char* const* parameters, size_t parameter_count,
                                 lglab_laurent** out) {
  REQUIRE_ARG(text);
  REQUIRE_ARG(out);
  return guarded([&] {
    std::vector<std::string> params;
    for (std::size_t i = 0; i < parameter_count; ++i) {
      if (!parameters[i]) throw ParameterError("null parameter name");
      params.emplace_back(parameters[i]);
    }
    *out = new lglab_laurent{LaurentPolynomial::parse(text, params)};
  });
}

lglab_status lglab_laurent_specialize(const lglab_laurent* f, const char* const* items, size_t count,
                                      lglab_laurent** out) {
  REQUIRE_ARG(f);
  REQUIRE_ARG(out);
  return guarded([&] { *out = new lglab_laurent{f->f.specialize(assignments(items, count))}; });
}

lglab_status lglab_laurent_to_string(const lglab_laurent* f, char** out) {
  REQUIRE_ARG(f);
  REQUIRE_ARG(out);
  return guarded([&] { *out = copy(f->f.to_string()); });
}

void lglab_laurent_free(lglab_laurent* f) { delete f; }

lglab_status lglab_period_json(const lglab_laurent* f, int terms, const char* shift, char** out) {
  REQUIRE_ARG(f);
  REQUIRE_ARG(out);
  return guarded([&] {
    if (terms < 0) throw ParameterError("terms must be non-negative");
    auto g = f->f;
    if (shift) g = g - LaurentPolynomial::constant(parse_rational(shift));
    *out = copy(io::dump(io::period_report(period_sequence(g, terms))));
  });
}

lglab_status lglab_picard_fuchs(const lglab_laurent* f, const lglab_search_options* options, const char* shift,
                                lglab_operator** out) {
  REQUIRE_ARG(f);
  REQUIRE_ARG(out);
  return guarded([&] {
    if (options && options->terms < 0) throw ParameterError("terms must be non-negative");
    Rational s = shift ? parse_rational(shift) : Rational(0);
    auto g = f->f;
    if (s != 0) g = g - LaurentPolynomial::constant(s);
    auto r = search_picard_fuchs(g, stages(options), options ? options->terms : 0);
    *out = new lglab_operator{r.op, s, static_cast<int>(r.periods.length())};
  });
}

lglab_status lglab_operator_json(const lglab_operator* op, char** out) {
  REQUIRE_ARG(op);
  REQUIRE_ARG(out);
  return guarded([&] { *out = copy(io::dump(io::operator_report(op->op, op->terms, op->shift))); });
}

lglab_status lglab_monodromy_json(const lglab_operator* op, const char* at, const char* fiber, char** out) {
  REQUIRE_ARG(op);
  REQUIRE_ARG(out);
  return guarded([&] {
    if (at && fiber) throw ParameterError("give either an operator point or a fiber, not both");
    auto all = analyze_operator(op->op);
    std::vector<PointAnalysis> points;
    if (!at && !fiber) {
      points = all;
    } else {
      SingularPoint p;
      if (at) {
        std::string a = at;
        p = a == "inf" ? SingularPoint::infinity() : SingularPoint::at(parse_rational(a));
      } else {
        std::string l = fiber;
        auto lam = l == "inf" ? SingularPoint::infinity() : SingularPoint::at(parse_rational(l));
        p = operator_point(lam, op->shift);
      }
      bool found = false;
      for (const auto& a : all)
        if (a.point.same_location(p)) {
          points.push_back(a);
          found = true;
        }
      if (!found) {
        auto data = indicial_polynomial(op->op, p);
        points.push_back({p, data, classify_point(data)});
      }
    }
    *out = copy(io::dump(io::monodromy_report(op->op, points, op->shift)));
  });
}

void lglab_operator_free(lglab_operator* op) { delete op; }

lglab_status lglab_pencil_json(const lglab_laurent* f, char** out) {
  REQUIRE_ARG(f);
  REQUIRE_ARG(out);
  return guarded([&] {
    auto p = homogenize(f->f);
    *out = copy(io::dump(io::pencil_report(p, base_locus(p), fixed_singular_points(p))));
  });
}

lglab_status lglab_fiber_json(const lglab_laurent* f, const char* lambda, const lglab_annotations* annotations,
                              const char* family, char** out) {
  REQUIRE_ARG(f);
  REQUIRE_ARG(lambda);
  REQUIRE_ARG(out);
  return guarded([&] {
    auto p = homogenize(f->f);
    std::vector<Annotation> ann;
    if (annotations) ann = family ? annotations->set.for_family(family) : annotations->set.annotations;
    *out = copy(io::dump(io::fiber_report(fiber_report(p, parse_rational(lambda), ann))));
  });
}

lglab_status lglab_catalog_load(const char* path, lglab_catalog** out) {
  REQUIRE_ARG(path);
  REQUIRE_ARG(out);
  return guarded([&] { *out = new lglab_catalog{load_catalog(path)}; });
}

lglab_status lglab_catalog_list_json(const lglab_catalog* catalog, char** out) {
  REQUIRE_ARG(catalog);
  REQUIRE_ARG(out);
  return guarded([&] { *out = copy(io::dump(io::catalog_report(catalog->records))); });
}

lglab_status lglab_catalog_family(const lglab_catalog* catalog, const char* id, const char* const* items,
                                  size_t count, lglab_laurent** out, char** shift) {
  REQUIRE_ARG(catalog);
  REQUIRE_ARG(id);
  REQUIRE_ARG(out);
  return guarded([&] {
    const auto& rec = find_family(catalog->records, id);
    auto f = specialize_family(rec, assignments(items, count));
    *out = new lglab_laurent{std::move(f)};
    if (shift) *shift = copy(to_string(rec.period_shift));
  });
}

void lglab_catalog_free(lglab_catalog* catalog) { delete catalog; }

lglab_status lglab_annotations_load(const char* path, lglab_annotations** out) {
  REQUIRE_ARG(path);
  REQUIRE_ARG(out);
  return guarded([&] { *out = new lglab_annotations{load_annotations(path)}; });
}

void lglab_annotations_free(lglab_annotations* annotations) { delete annotations; }

lglab_status lglab_classify_json(const lglab_catalog* catalog, const char* id, const char* const* items,
                                 size_t count, const lglab_search_options* options,
                                 const lglab_annotations* annotations, char** out, int* indeterminate) {
  REQUIRE_ARG(catalog);
  REQUIRE_ARG(id);
  REQUIRE_ARG(out);
  return guarded([&] {
    const auto& rec = find_family(catalog->records, id);
    auto v = classify_family(rec, classify_options(rec, assignments(items, count), options, annotations));
    if (indeterminate) *indeterminate = v.status == VerdictStatus::Indeterminate ? 1 : 0;
    *out = copy(io::dump(io::verdict_report(v)));
  });
}

lglab_status lglab_sweep_json(const lglab_catalog* catalog, const char* id, const char* const* axes,
                              size_t axis_count, const lglab_search_options* options,
                              const lglab_annotations* annotations, int monodromy, char** out) {
  REQUIRE_ARG(catalog);
  REQUIRE_ARG(id);
  REQUIRE_ARG(out);
  return guarded([&] {
    const auto& rec = find_family(catalog->records, id);
    SweepOptions opts;
    opts.classify = classify_options(rec, {}, options, annotations);
    opts.monodromy = monodromy != 0;
    *out = copy(io::dump(io::sweep_report(parameter_sweep(rec, grid(axes, axis_count), opts))));
  });
}

}  // extern "C"
