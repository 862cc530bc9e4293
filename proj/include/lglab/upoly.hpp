#pragma once

#include "lglab/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lglab {

/// Dense univariate polynomial over Q; coeffs[i] multiplies y^i, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(int degree, const Rational& c = 1);
  /// Product of (y - r) over the given roots.
  static UPoly from_roots(const std::vector<Rational>& roots);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  /// Exponent of the lowest nonzero term; 0 for the zero polynomial.
  int valuation() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& c);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DomainError for a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  UPoly compose(const UPoly& inner) const;
  /// p(y + c).
  UPoly shift(const Rational& c) const;
  UPoly monic() const;
  /// Integer-primitive with positive leading coefficient, as integers.
  std::vector<Integer> primitive_integer() const;
  static UPoly from_integers(const std::vector<Integer>& c);

  std::string to_string(const std::string& var = "y") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtendedGcd {
  UPoly g, s, t;
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UPoly& p);

/// Irreducible factors over Q with multiplicities; factors monic, sorted by
/// (degree, coefficients). Unit is the leading coefficient of p.
struct UFactorization {
  Rational unit;
  std::vector<std::pair<UPoly, int>> factors;
};
UFactorization factor(const UPoly& p);

/// Yun square-free decomposition over Q: pairs (monic square-free part, multiplicity).
std::vector<std::pair<UPoly, int>> squarefree(const UPoly& p);

/// Resultant via the Euclidean algorithm over Q.
Rational resultant(const UPoly& a, const UPoly& b);

/// Lagrange interpolation through (xs[i], values[i]); xs distinct.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& values);

}  // namespace lglab
