#pragma once

#include "lglab/rational.hpp"

#include <optional>
#include <vector>

namespace lglab {

using Matrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<Integer>>;

/// Fraction-free (Bareiss) row echelon form in place; returns pivot columns.
/// Pivots are chosen by smallest absolute value within each column.
std::vector<std::size_t> echelon_fraction_free(IntMatrix& a);

/// Basis of the right nullspace; each vector integer-primitive, ordered by
/// its free column.
std::vector<std::vector<Integer>> nullspace(const IntMatrix& a);
std::vector<std::vector<Integer>> nullspace(const Matrix& a);

std::size_t rank(const Matrix& a);
Rational determinant(Matrix a);
std::optional<Matrix> inverse(const Matrix& a);

/// Clears denominators row-wise.
IntMatrix integer_rows(const Matrix& a);

}  // namespace lglab
