#pragma once

#include "lglab/polynomial.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lglab {

/// x_j -> scalars[j] * prod_i x_i^{matrix[i][j]} over the torus variables.
struct MonomialMap {
  std::vector<std::vector<int>> matrix;
  std::vector<Rational> scalars;

  static MonomialMap identity(std::size_t n);
  long long determinant() const;
};

using LaurentExponents = std::vector<int>;
using LaurentTerm = std::pair<LaurentExponents, Rational>;

/// numerator / monomial over a ring whose variables are the torus variables
/// (alphabetical) followed by the parameters (declaration order). Parameters
/// never appear in the denominator, and the fraction is fully cancelled.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(Polynomial numerator, Exponents denominator, std::vector<std::string> parameters);
  /// Builds the canonical form from Laurent terms over `variables` (exponents
  /// of parameters must be non-negative).
  static LaurentPolynomial from_terms(std::vector<std::string> variables,
                                      std::vector<std::string> parameters,
                                      const std::vector<LaurentTerm>& terms);
  static LaurentPolynomial constant(const Rational& c);

  /// Parses the expression grammar; identifiers listed in `parameters` are
  /// parameters, every other identifier is a torus variable.
  static LaurentPolynomial parse(std::string_view text,
                                 const std::vector<std::string>& parameters = {});

  const Polynomial& numerator() const { return numerator_; }
  const Exponents& denominator() const { return denominator_; }
  const std::vector<std::string>& variables() const { return numerator_.variables(); }
  const std::vector<std::string>& parameters() const { return parameters_; }
  std::vector<std::string> torus_variables() const;
  std::size_t torus_dimension() const { return variables().size() - parameters_.size(); }
  bool has_parameters() const { return !parameters_.empty(); }
  bool is_zero() const { return numerator_.is_zero(); }

  /// Laurent exponents over all variables with coefficients, grlex descending.
  std::vector<LaurentTerm> terms() const;
  /// Distinct Laurent exponents restricted to the torus variables.
  std::vector<LaurentExponents> torus_support() const;

  Rational constant_term() const;
  LaurentPolynomial power(unsigned k) const;
  LaurentPolynomial substitute_monomial(const MonomialMap& m) const;
  LaurentPolynomial specialize(const std::map<std::string, Rational>& assignment) const;
  /// Re-expresses over a torus variable list containing this one's.
  LaurentPolynomial embed_torus(const std::vector<std::string>& torus) const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

  std::string to_string() const;

 private:
  Polynomial numerator_;
  Exponents denominator_;
  std::vector<std::string> parameters_;
};

/// Torus variables sorted, then parameters in the given order.
std::vector<std::string> laurent_ring(std::vector<std::string> torus,
                                      const std::vector<std::string>& parameters);

}  // namespace lglab
