#pragma once

#include "lglab/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lglab {

using Exponents = std::vector<int>;

struct Term {
  Exponents exponents;
  Rational coefficient;
};

/// Graded-lexicographic comparison: total degree first, then lex with the
/// first variable most significant.
int grlex_compare(const Exponents& a, const Exponents& b);

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept sorted in descending grlex order with no duplicate exponent
/// vectors and no zero coefficients, so equality is structural. Binary
/// operations require both operands to live over the same variable list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);
  Polynomial(std::vector<std::string> variables, std::vector<Term> terms);

  static Polynomial constant(std::vector<std::string> variables, const Rational& c);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);
  static Polynomial monomial(std::vector<std::string> variables, Exponents exponents,
                             const Rational& c = 1);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }
  std::optional<std::size_t> variable_index(std::string_view name) const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the zero exponent vector.
  Rational constant_value() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  int min_degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool involves(std::size_t var) const;
  std::vector<std::size_t> present_variables() const;
  Rational coefficient(const Exponents& e) const;
  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;
  /// Sets one variable to a value; the variable slot stays in the ring.
  Polynomial evaluate_at(std::size_t var, const Rational& value) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Replaces variable i by images[i]; all images share one target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Re-expresses this polynomial over `target`, matching variables by name.
  Polynomial embed(const std::vector<std::string>& target) const;
  /// Same terms, different names (same arity).
  Polynomial renamed(std::vector<std::string> names) const;

  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  /// Terms whose selected-variable total degree equals `degree`.
  Polynomial homogeneous_part(const std::vector<std::size_t>& vars, int degree) const;
  /// Drops terms whose selected-variable total degree exceeds `degree`.
  Polynomial truncated(const std::vector<std::size_t>& vars, int degree) const;

  /// Rational c with (*this / c) integer-primitive and its grlex leading
  /// coefficient positive.
  Rational normalizing_unit() const;
  Polynomial normalized() const;
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void normalize();

  std::vector<std::string> variables_;
  std::vector<Term> terms_;
};

/// x_0 ... x_{n-1} style helper for tests and internal rings.
std::vector<std::string> standard_variables(std::size_t n, std::string_view stem = "x");

}  // namespace lglab
