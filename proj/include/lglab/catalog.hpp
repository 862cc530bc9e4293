#pragma once

#include "lglab/monodromy.hpp"
#include "lglab/pencil.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lglab {

enum class Rationality { Rational, NonRational, GenericallyRational, Unknown };
std::string to_string(Rationality r);

using ParameterAssignment = std::map<std::string, Rational>;

struct FamilyRecord {
  std::string id;
  std::optional<int> degree;
  std::optional<int> h12;
  Rationality rational = Rationality::Unknown;
  std::optional<std::string> lg_text;
  std::optional<LaurentPolynomial> lg;
  std::vector<std::string> parameters;
  int parameter_count = 0;
  ParameterAssignment default_parameters;
  /// Relations "lhs=rhs" in the parameters.
  std::vector<std::string> bad_parameters;
  /// The period is computed for lg - period_shift.
  Rational period_shift;
  std::vector<std::string> references;
  std::map<std::string, std::string> provenance;
};

/// Throws Error(Io) when unreadable and Error(Invalid) naming the record on
/// schema or parse failures.
std::vector<FamilyRecord> load_catalog(const std::string& path);
std::vector<FamilyRecord> parse_catalog(const std::string& json_text);
const FamilyRecord& find_family(const std::vector<FamilyRecord>& catalog, const std::string& id);

struct AnnotationSet {
  std::vector<Annotation> annotations;
  /// Families whose point contributions are known to be incomplete.
  std::set<std::string> partial;

  std::vector<Annotation> for_family(const std::string& id) const;
};

AnnotationSet load_annotations(const std::string& path);
AnnotationSet parse_annotations(const std::string& json_text);

/// Relations of rec.bad_parameters that hold under the assignment.
std::vector<std::string> violated_relations(const FamilyRecord& rec, const ParameterAssignment& values);

/// Fills defaults, rejects unknown names and missing values (ParameterError).
ParameterAssignment resolve_parameters(const FamilyRecord& rec, const ParameterAssignment& given);

/// lg specialized at resolved parameters; ParameterError on a bad relation
/// unless allow_bad.
LaurentPolynomial specialize_family(const FamilyRecord& rec, const ParameterAssignment& given, bool allow_bad = false);

struct NonreducedFiber {
  Rational lambda;
  NonreducedComponent component;
};

/// Values lambda where numerator(f) - lambda * denominator has a repeated
/// factor. Candidates come from discriminants along random lines and are
/// confirmed by square-free decomposition.
std::vector<NonreducedFiber> find_nonreduced_fibers(const LaurentPolynomial& f, std::uint64_t seed = 0);

struct ClassifyOptions {
  ParameterAssignment parameters;
  /// Fixed number of period terms; 0 grows through `stages`.
  int period_length = 0;
  std::vector<PicardFuchsOptions> stages{{3, 4, 20}, {4, 8, 20}, {5, 16, 20}};
  std::vector<Annotation> annotations;
  bool annotations_complete = true;
  std::uint64_t seed = 0;
};

struct FiberMonodromy {
  Rational lambda;
  SingularPoint operator_point;
  std::vector<Rational> exponents;
  MonodromyClass monodromy;
};

struct HodgeCheck {
  int sum = 0;
  int expected = 0;
  /// "match", "mismatch" or "lower-bound".
  std::string flag;
};

enum class VerdictStatus { Determined, Indeterminate };
std::string to_string(VerdictStatus s);

struct Verdict {
  std::string family;
  ParameterAssignment parameters;
  Rationality rational = Rationality::Unknown;
  VerdictStatus status = VerdictStatus::Indeterminate;
  std::vector<std::string> diagnostics;
  std::optional<NonreducedFiber> nonreduced;
  int period_terms = 0;
  std::optional<DifferentialOperator> picard_fuchs;
  Rational period_shift;
  std::vector<PointAnalysis> points;
  /// Reducible fibers, ascending lambda.
  std::vector<FiberReport> fibers;
  /// One entry per reducible fiber (or the non-reduced fiber).
  std::vector<FiberMonodromy> monodromy;
  bool all_unipotent = true;
  bool theorem2_consistent = false;
  std::optional<HodgeCheck> theorem1_check;
};

Verdict classify_family(const FamilyRecord& rec, const ClassifyOptions& options = {});

/// Sum of rho - 1 over the fibers against rec.h12.
HodgeCheck hodge_check(const FamilyRecord& rec, const std::vector<FiberReport>& fibers, bool annotations_complete = true);

struct SweepOptions {
  ClassifyOptions classify;
  /// Off: only pencil data (base locus, reducible fibers over candidates).
  bool monodromy = true;
  /// Fibers examined when monodromy is off.
  std::vector<Rational> lambdas{0};
};

struct SweepPoint {
  ParameterAssignment parameters;
  std::vector<std::string> violated;
  VerdictStatus status = VerdictStatus::Indeterminate;
  std::vector<std::string> diagnostics;
  std::vector<Rational> reducible;
  std::vector<FiberMonodromy> monodromy;
  /// Labels, m and hyperplane decompositions of the base locus.
  std::string base_locus;
  std::string signature;
  bool wall = false;
};

struct SweepReport {
  std::string family;
  std::vector<SweepPoint> points;
  /// Every point avoiding bad relations shares one signature.
  bool constant = false;
  std::vector<std::size_t> walls;
};

SweepReport parameter_sweep(const FamilyRecord& rec, const std::vector<ParameterAssignment>& grid,
                            const SweepOptions& options = {});

/// "x: L{x; t}*2, ..." description used in sweep signatures.
std::string base_locus_signature(const BaseLocusReport& r);

}  // namespace lglab
