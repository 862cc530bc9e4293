#pragma once

#include "lglab/laurent.hpp"

#include <vector>

namespace lglab {

using Point = std::vector<long long>;

/// normal . x <= offset with a primitive normal.
struct Facet {
  Point normal;
  long long offset;
  friend bool operator==(const Facet&, const Facet&) = default;
};

struct LatticePolytope {
  int ambient = 0;
  /// Affine dimension; -1 for the empty polytope.
  int dimension = -1;
  /// Extreme points, lexicographic.
  std::vector<Point> vertices;
  /// Facet inequalities; for lower-dimensional polytopes these are relative
  /// to the affine hull and only meaningful together with `equations`.
  std::vector<Facet> facets;
  /// normal . x == offset cutting out the affine hull.
  std::vector<Facet> equations;

  bool full_dimensional() const { return dimension == ambient; }
  bool contains(const Point& p) const;
  bool interior(const Point& p) const;
  std::vector<Point> lattice_points() const;
};

LatticePolytope convex_hull(const std::vector<Point>& points);
LatticePolytope newton_polytope(const LaurentPolynomial& f);
/// Throws DomainError unless P is full-dimensional.
bool is_reflexive(const LatticePolytope& p);
bool same_polytope(const LaurentPolynomial& f, const LaurentPolynomial& g);

}  // namespace lglab
