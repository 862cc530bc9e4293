#pragma once

#include "lglab/periods.hpp"
#include "lglab/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lglab {

struct SingularPoint {
  enum class Location { Rational, Infinity, Algebraic };
  enum class Kind { RegularSingular, Irregular, ApparentCandidate };

  Location location = Location::Rational;
  Rational value;
  /// Monic and irreducible over Q, degree >= 2, for algebraic classes.
  UPoly minimal;
  Kind kind = Kind::RegularSingular;

  static SingularPoint at(const Rational& c);
  static SingularPoint infinity();
  static SingularPoint algebraic(const UPoly& m);

  /// t - c for rational points, the minimal polynomial for classes.
  UPoly modulus() const;
  /// "0", "-1/27", "inf", "root of 108*t^2 - 1".
  std::string label(const std::string& var = "t") const;
  bool same_location(const SingularPoint& o) const;
};

std::string to_string(SingularPoint::Kind k);

/// sum_k c_k(s) theta_s^k; entries are elements of Q[t]/(modulus), stored as
/// reduced polynomials (constants at rational points and at infinity).
struct LocalOperator {
  SingularPoint point;
  /// coefficients[i][k] multiplies s^k theta^i.
  std::vector<std::vector<UPoly>> coefficients;

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  std::string to_string() const;
};

struct IndicialData {
  SingularPoint point;
  /// Monic indicial polynomial; coefficient of y^i as an element of
  /// Q[t]/(modulus).
  std::vector<UPoly> polynomial;
  /// The indicial polynomial itself at rational points and infinity; its norm
  /// down to Q at algebraic classes.
  UPoly rational_form;
  /// Rational exponents with multiplicity, ascending (per conjugate point).
  std::vector<Rational> exponents;
  /// Monic Q-irreducible factors of rational_form of degree >= 2, repeated by
  /// multiplicity.
  std::vector<UPoly> residual;
};

enum class MonodromyTag { Unipotent, QuasiUnipotentNonUnipotent, NonQuasiUnipotent, Indeterminate };
std::string to_string(MonodromyTag tag);

struct MonodromyClass {
  MonodromyTag tag = MonodromyTag::Indeterminate;
  std::string justification;
};

/// a_0..a_r with L = sum a_k(t) (d/dt)^k.
std::vector<UPoly> derivative_form(const DifferentialOperator& L);

/// Roots of the leading derivative-form coefficient (0 always among them),
/// then infinity; ordered rational ascending, classes, infinity.
std::vector<SingularPoint> singular_points(const DifferentialOperator& L);

LocalOperator localize(const DifferentialOperator& L, const SingularPoint& p);
IndicialData indicial_polynomial(const DifferentialOperator& L, const SingularPoint& p);
MonodromyClass classify_point(const IndicialData& data);

/// Global Fuchs relation over singular_points(L).
bool fuchs_relation_check(const DifferentialOperator& L);
/// Same identity over a supplied point set (ordinary points contribute zero).
bool fuchs_relation_check(const DifferentialOperator& L, const std::vector<SingularPoint>& points);

struct PointAnalysis {
  SingularPoint point;
  std::optional<IndicialData> indicial;
  MonodromyClass monodromy;
};
std::vector<PointAnalysis> analyze_operator(const DifferentialOperator& L);

/// For the period of f - shift, the operator point t sits over the fiber
/// lambda = shift + 1/t. Maps in both directions.
SingularPoint fiber_point(const SingularPoint& t_point, const Rational& shift);
SingularPoint operator_point(const SingularPoint& fiber, const Rational& shift);

}  // namespace lglab
