#pragma once

#include "lglab/polynomial.hpp"
#include "lglab/upoly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace lglab {

struct FactorizationResult {
  Rational unit = 1;
  /// Primitive factors with positive grlex leading coefficient, sorted by
  /// (total degree, grlex terms).
  std::vector<std::pair<Polynomial, int>> factors;
  bool certified = true;

  Polynomial expand(const std::vector<std::string>& variables) const;
  std::size_t distinct() const { return factors.size(); }
};

/// Normalized gcd (integer-primitive, positive leading coefficient).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Pairwise-coprime square-free parts g_i with p = unit * prod g_i^{m_i}.
FactorizationResult squarefree_decomposition(const Polynomial& p);

/// Factorization into Q-irreducible factors for inputs of total degree <= 6.
/// `certified` requires every factor to have degree <= max_factor_degree and
/// an irreducible degree-preserving line restriction.
FactorizationResult factor_form(const Polynomial& p, int max_factor_degree = 4,
                                std::uint64_t seed = 0);

/// Minimal total (u,v)-degree of p after a linear change of coordinates
/// sending the independent linear forms l1, l2 to u, v.
int vanishing_order(const Polynomial& p, const Polynomial& l1, const Polynomial& l2);

/// Univariate view of a polynomial that involves at most variable `var`.
UPoly to_upoly(const Polynomial& p, std::size_t var);
Polynomial from_upoly(const UPoly& u, const std::vector<std::string>& variables, std::size_t var);

/// Coefficients of p as a polynomial in `var` (index = power of var).
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var);

bool polynomial_less(const Polynomial& a, const Polynomial& b);

}  // namespace lglab
