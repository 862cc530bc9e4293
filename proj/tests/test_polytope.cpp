#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lglab/error.hpp"
#include "lglab/linalg.hpp"
#include "lglab/polytope.hpp"

#include <random>
#include <set>
#include <tuple>

using namespace lglab;

namespace {

// Brute-force facet oracle: every hyperplane through d affinely independent
// points with all points on one side.
std::set<Facet, bool (*)(const Facet&, const Facet&)> brute_facets(const std::vector<Point>& pts) {
  auto less = +[](const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  };
  std::set<Facet, bool (*)(const Facet&, const Facet&)> out(less);
  std::size_t d = pts[0].size(), n = pts.size();
  std::vector<int> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = static_cast<int>(i);
  for (;;) {
    IntMatrix m;
    for (std::size_t i = 1; i < d; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < d; ++k) row.emplace_back(static_cast<long>(pts[idx[i]][k] - pts[idx[0]][k]));
      m.push_back(row);
    }
    auto ns = nullspace(m);
    if (ns.size() == 1) {
      Point nrm;
      for (auto& v : ns[0]) nrm.push_back(v.get_si());
      long long c = 0;
      for (std::size_t k = 0; k < d; ++k) c += nrm[k] * pts[idx[0]][k];
      for (int sign : {1, -1}) {
        bool ok = true;
        for (const auto& p : pts) {
          long long v = 0;
          for (std::size_t k = 0; k < d; ++k) v += nrm[k] * p[k];
          if (sign * v > sign * c) ok = false;
        }
        if (ok) {
          Point sn = nrm;
          for (auto& v : sn) v *= sign;
          out.insert({sn, sign * c});
        }
      }
    }
    int i = static_cast<int>(d) - 1;
    while (i >= 0 && idx[i] == static_cast<int>(n - d) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (std::size_t j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Point> minkowski(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out;
  for (const auto& p : a)
    for (const auto& q : b) {
      Point s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
      out.push_back(s);
    }
  return out;
}

}  // namespace

TEST_CASE("newton polytope of the mirror of the plane") {
  auto p = newton_polytope(LaurentPolynomial::parse("x + y + 1/(x*y)"));
  CHECK(p.dimension == 2);
  CHECK(p.vertices == std::vector<Point>{{-1, -1}, {0, 1}, {1, 0}});
  CHECK(is_reflexive(p));
  CHECK(p.interior({0, 0}));
}

TEST_CASE("quartic simplex") {
  auto p = newton_polytope(LaurentPolynomial::parse("(x+y+z+1)^4/(x*y*z)"));
  CHECK(p.full_dimensional());
  CHECK(p.vertices.size() == 4);
  CHECK(p.interior({0, 0, 0}));
  CHECK(is_reflexive(p));
}

TEST_CASE("degenerate inputs") {
  auto c = newton_polytope(LaurentPolynomial::parse("5"));
  CHECK(c.dimension == 0);
  auto seg = convex_hull({{0, 0}, {1, 1}, {2, 2}});
  CHECK(seg.dimension == 1);
  CHECK(seg.vertices == std::vector<Point>{{0, 0}, {2, 2}});
  CHECK(seg.contains({1, 1}));
  CHECK_FALSE(seg.contains({1, 0}));
  CHECK_THROWS_AS(is_reflexive(seg), DomainError);
}

TEST_CASE("2-12 model is reflexive and parameter keeps the polytope") {
  auto fa = LaurentPolynomial::parse("(x+y)*(y+z)*(z+1)*(x+a)/(x*y*z)", {"a"});
  auto f1 = fa.specialize({{"a", 1}}), f2 = fa.specialize({{"a", 2}});
  CHECK(is_reflexive(newton_polytope(f1)));
  CHECK(same_polytope(f1, f2));
  CHECK_FALSE(same_polytope(f1, f1 + LaurentPolynomial::parse("x^3")));
  MonomialMap m = MonomialMap::identity(3);
  m.matrix[0][1] = 1;
  CHECK_FALSE(same_polytope(f1, f1.substitute_monomial(m)));
}

TEST_CASE("reflexive polytopes have a unique interior lattice point") {
  for (const char* text : {"x + y + 1/(x*y)", "(x+y+z+1)^4/(x*y*z)", "(x+1)*(y+1)*(z+1)*(x+y+z+1)/(x*y*z)",
                           "(x+y+1)^3/(x*y*z) + z"}) {
    auto p = newton_polytope(LaurentPolynomial::parse(text));
    if (!is_reflexive(p)) continue;
    int inner = 0;
    for (const auto& q : p.lattice_points())
      if (p.interior(q)) ++inner;
    CHECK(inner == 1);
  }
}

TEST_CASE("hull facets agree with the brute-force oracle") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int dim = 2; dim <= 4; ++dim)
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Point> pts;
      for (int i = 0; i < 14; ++i) {
        Point p(dim);
        for (auto& v : p) v = c(rng);
        pts.push_back(p);
      }
      auto hull = convex_hull(pts);
      REQUIRE(hull.full_dimensional());
      auto expected = brute_facets(pts);
      CHECK(hull.facets == std::vector<Facet>(expected.begin(), expected.end()));
      for (const auto& p : pts) CHECK(hull.contains(p));
    }
}

TEST_CASE("newton polytope of a product is the Minkowski sum") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(-2, 2), c(1, 4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<LaurentTerm> a, b;
    for (int i = 0; i < 5; ++i) a.push_back({{e(rng), e(rng), e(rng)}, c(rng)});
    for (int i = 0; i < 4; ++i) b.push_back({{e(rng), e(rng), e(rng)}, c(rng)});
    auto fa = LaurentPolynomial::from_terms({"x", "y", "z"}, {}, a);
    auto fb = LaurentPolynomial::from_terms({"x", "y", "z"}, {}, b);
    auto pa = newton_polytope(fa), pb = newton_polytope(fb);
    auto sum = convex_hull(minkowski(pa.vertices, pb.vertices));
    CHECK(newton_polytope(fa * fb).vertices == sum.vertices);
  }
}
