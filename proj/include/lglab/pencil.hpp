#pragma once

#include "lglab/factor.hpp"
#include "lglab/laurent.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lglab {

/// F(x, y, z, t) = lambda * x*y*z*t.
struct QuarticPencil {
  Polynomial F;
  LaurentPolynomial origin;

  /// F - lambda * xyzt.
  Polynomial member(const Rational& lambda) const;
};

/// Ring of the pencil: x, y, z, t.
const std::vector<std::string>& pencil_variables();

/// Clears xyz from a three-variable Laurent polynomial and homogenizes with t.
/// Torus variables are mapped to x, y, z in alphabetical order.
QuarticPencil homogenize(const LaurentPolynomial& f);

/// {v = 0, g = 0} with g irreducible and free of v. Lines cut out by two
/// coordinates are stored with v the earlier coordinate.
struct BaseCurve {
  std::size_t hyperplane = 0;
  Polynomial form;
  std::string label;

  int degree() const { return form.total_degree(); }
  bool is_line() const { return degree() == 1; }
};

struct HyperplaneSection {
  std::size_t hyperplane = 0;
  /// (curve label, multiplicity in the restriction)
  std::vector<std::pair<std::string, int>> components;
  bool certified = true;
};

struct BaseLocusReport {
  /// (curve, m), ordered by label.
  std::vector<std::pair<BaseCurve, int>> curves;
  std::vector<HyperplaneSection> hyperplane_sections;
  bool certified = true;

  std::optional<int> multiplicity(const std::string& label) const;
};

BaseLocusReport base_locus(const QuarticPencil& p);

/// Vanishing order of F - lambda*xyzt along the curve. Lines use a linear
/// change of coordinates; other curves use the minimum point multiplicity
/// over small rational points of the curve (UnsupportedError when none).
int member_multiplicity(const QuarticPencil& p, const BaseCurve& c, const Rational& lambda);

/// 0 if M <= 1, m - 1 if M >= 2; InvariantError if M > m.
int exceptional_count(int m, int M);

struct ReducibleFiber {
  Rational lambda;
  FactorizationResult factors;
  /// Set when the factorization could not be certified.
  bool warning = false;
};

std::vector<ReducibleFiber> find_reducible_lambdas(const QuarticPencil& p, const std::vector<Rational>& candidates);

using ProjectivePoint = std::array<Rational, 4>;
std::string to_string(const ProjectivePoint& p);
/// Scales so the first nonzero coordinate is 1.
ProjectivePoint normalize_point(ProjectivePoint p);

struct Annotation {
  std::string family;
  Rational lambda;
  ProjectivePoint point;
  int d_value = 0;
  std::string source;
};

struct CurveContribution {
  BaseCurve curve;
  int m = 0;
  /// Absent when the multiplicity could not be computed.
  std::optional<int> M;
  int C = 0;
};

struct FiberReport {
  Rational lambda;
  FactorizationResult s_components;
  std::vector<CurveContribution> curves;
  std::vector<Annotation> points;
  /// Distinct s-factors plus curve contributions.
  int automated_rho = 0;
  /// automated_rho plus annotated point contributions.
  int rho = 0;
  bool annotated = false;
  /// Some curve multiplicity could not be computed, so rho is a lower bound.
  bool incomplete = false;
  bool reduced = true;
  std::string nonreduced_reason;
};

/// Annotations whose lambda differs from `lambda` are ignored.
FiberReport fiber_report(const QuarticPencil& p, const Rational& lambda, const std::vector<Annotation>& annotations = {});

struct NonreducedComponent {
  Polynomial factor;
  int multiplicity = 0;
};

/// Highest-multiplicity repeated factor of numerator(f) - lambda * denominator.
std::optional<NonreducedComponent> detect_nonreduced_torus(const LaurentPolynomial& f, const Rational& lambda);

struct FixedSingularLocus {
  std::vector<ProjectivePoint> points;
  /// Coordinate lines along which every member is singular.
  std::vector<std::string> singular_lines;
};

/// Points singular on every member; these lie where two coordinates vanish.
FixedSingularLocus fixed_singular_points(const QuarticPencil& p);

}  // namespace lglab
