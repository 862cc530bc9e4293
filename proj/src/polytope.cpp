#include "lglab/polytope.hpp"

#include "lglab/error.hpp"
#include "lglab/linalg.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace lglab {

namespace {

long long dot(const Point& a, const Point& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntMatrix differences(const std::vector<Point>& pts, const std::vector<int>& idx) {
  IntMatrix m;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::vector<Integer> row;
    for (std::size_t k = 0; k < pts[idx[i]].size(); ++k)
      row.emplace_back(static_cast<long>(pts[idx[i]][k] - pts[idx[0]][k]));
    m.push_back(std::move(row));
  }
  return m;
}

std::size_t affine_rank(const std::vector<Point>& pts, const std::vector<int>& idx) {
  if (idx.size() <= 1) return 0;
  IntMatrix m = differences(pts, idx);
  return echelon_fraction_free(m).size();
}

Point to_point(const std::vector<Integer>& v) {
  Point p;
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw InvariantError("facet normal overflows 64 bits");
    p.push_back(x.get_si());
  }
  return p;
}

struct HullFacet {
  Point normal;
  long long offset;
  std::vector<int> points;
};

// Beneath-beyond convex hull of full-dimensional points in Z^d, d >= 2.
std::vector<HullFacet> hull_full(const std::vector<Point>& pts, int d) {
  std::vector<int> simplex{0};
  for (int i = 1; i < static_cast<int>(pts.size()) && static_cast<int>(simplex.size()) <= d; ++i) {
    simplex.push_back(i);
    if (affine_rank(pts, simplex) < simplex.size() - 1) simplex.pop_back();
  }
  Point centre(d, 0);
  for (int i : simplex)
    for (int k = 0; k < d; ++k) centre[k] += pts[i][k];
  const long long scale = d + 1;

  std::vector<int> inserted = simplex;
  auto make_facet = [&](const std::vector<int>& through) -> HullFacet {
    auto ns = nullspace(differences(pts, through));
    if (ns.size() != 1) throw InvariantError("hyperplane is not determined by its points");
    HullFacet f{to_point(ns[0]), 0, {}};
    f.offset = dot(f.normal, pts[through[0]]);
    if (dot(f.normal, centre) > scale * f.offset) {
      for (auto& v : f.normal) v = -v;
      f.offset = -f.offset;
    }
    return f;
  };
  auto collect = [&](HullFacet& f) {
    f.points.clear();
    for (int i : inserted)
      if (dot(f.normal, pts[i]) == f.offset) f.points.push_back(i);
    std::sort(f.points.begin(), f.points.end());
  };

  std::vector<HullFacet> facets;
  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    std::vector<int> through;
    for (std::size_t j = 0; j < simplex.size(); ++j)
      if (j != skip) through.push_back(simplex[j]);
    HullFacet f = make_facet(through);
    collect(f);
    facets.push_back(std::move(f));
  }

  std::set<int> in_simplex(simplex.begin(), simplex.end());
  for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
    if (in_simplex.count(p)) continue;
    std::vector<bool> visible(facets.size());
    bool any = false;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      visible[i] = dot(facets[i].normal, pts[p]) > facets[i].offset;
      any = any || visible[i];
    }
    if (!any) {
      for (auto& f : facets)
        if (dot(f.normal, pts[p]) == f.offset) {
          f.points.push_back(p);
          std::sort(f.points.begin(), f.points.end());
        }
      inserted.push_back(p);
      continue;
    }
    inserted.push_back(p);
    std::vector<HullFacet> created;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (!visible[i]) continue;
      for (std::size_t j = 0; j < facets.size(); ++j) {
        if (visible[j]) continue;
        std::vector<int> common;
        std::set_intersection(facets[i].points.begin(), facets[i].points.end(),
                              facets[j].points.begin(), facets[j].points.end(),
                              std::back_inserter(common));
        if (common.size() < static_cast<std::size_t>(d - 1) ||
            affine_rank(pts, common) != static_cast<std::size_t>(d - 2))
          continue;
        if (dot(facets[j].normal, pts[p]) == facets[j].offset) continue;
        common.push_back(p);
        HullFacet h = make_facet(common);
        bool dup = std::any_of(created.begin(), created.end(), [&](const HullFacet& g) {
          return g.normal == h.normal && g.offset == h.offset;
        });
        if (dup) continue;
        collect(h);
        created.push_back(std::move(h));
      }
    }
    std::vector<HullFacet> next;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (visible[i]) continue;
      if (dot(facets[i].normal, pts[p]) == facets[i].offset) facets[i].points.push_back(p);
      next.push_back(std::move(facets[i]));
    }
    for (auto& h : created) next.push_back(std::move(h));
    facets = std::move(next);
    for (auto& f : facets) std::sort(f.points.begin(), f.points.end());
  }
  return facets;
}

}  // namespace

LatticePolytope convex_hull(const std::vector<Point>& input) {
  LatticePolytope out;
  if (input.empty()) return out;
  std::vector<Point> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  out.ambient = static_cast<int>(pts[0].size());

  std::vector<int> all(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
  IntMatrix diff = differences(pts, all);
  if (diff.empty()) diff.push_back(std::vector<Integer>(out.ambient, 0));
  for (auto& v : nullspace(diff)) {
    Point n = to_point(v);
    out.equations.push_back({n, dot(n, pts[0])});
  }
  IntMatrix ech = diff;
  auto chart = echelon_fraction_free(ech);
  int d = static_cast<int>(chart.size());
  out.dimension = d;

  std::vector<Point> proj;
  for (const auto& p : pts) {
    Point q;
    for (auto c : chart) q.push_back(p[c]);
    proj.push_back(std::move(q));
  }
  auto lift = [&](const Point& n) {
    Point full(out.ambient, 0);
    for (std::size_t k = 0; k < chart.size(); ++k) full[chart[k]] = n[k];
    return full;
  };

  std::vector<int> vertex_idx;
  if (d == 0) {
    vertex_idx.push_back(0);
  } else if (d == 1) {
    auto [lo, hi] = std::minmax_element(proj.begin(), proj.end());
    vertex_idx = {static_cast<int>(lo - proj.begin()), static_cast<int>(hi - proj.begin())};
    out.facets.push_back({lift({-1}), -(*lo)[0]});
    out.facets.push_back({lift({1}), (*hi)[0]});
  } else {
    auto facets = hull_full(proj, d);
    std::set<int> on_boundary;
    for (const auto& f : facets) {
      out.facets.push_back({lift(f.normal), f.offset});
      on_boundary.insert(f.points.begin(), f.points.end());
    }
    for (int i : on_boundary) {
      Matrix normals;
      for (const auto& f : facets)
        if (std::binary_search(f.points.begin(), f.points.end(), i))
        {
          std::vector<Rational> row;
          for (auto v : f.normal) row.emplace_back(static_cast<long>(v));
          normals.push_back(std::move(row));
        }
      if (rank(normals) == static_cast<std::size_t>(d)) vertex_idx.push_back(i);
    }
  }
  for (int i : vertex_idx) out.vertices.push_back(pts[i]);
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.facets.begin(), out.facets.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  return out;
}

bool LatticePolytope::contains(const Point& p) const {
  if (dimension < 0) return false;
  for (const auto& e : equations)
    if (dot(e.normal, p) != e.offset) return false;
  for (const auto& f : facets)
    if (dot(f.normal, p) > f.offset) return false;
  return true;
}

bool LatticePolytope::interior(const Point& p) const {
  if (!full_dimensional()) return false;
  for (const auto& f : facets)
    if (dot(f.normal, p) >= f.offset) return false;
  return true;
}

std::vector<Point> LatticePolytope::lattice_points() const {
  std::vector<Point> out;
  if (dimension < 0) return out;
  Point lo = vertices[0], hi = vertices[0];
  for (const auto& v : vertices)
    for (int k = 0; k < ambient; ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
  Point cur = lo;
  for (;;) {
    if (contains(cur)) out.push_back(cur);
    int k = ambient - 1;
    while (k >= 0 && cur[k] == hi[k]) {
      cur[k] = lo[k];
      --k;
    }
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

LatticePolytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw DomainError("Newton polytope of the zero polynomial");
  std::vector<Point> pts;
  for (const auto& e : f.torus_support()) pts.emplace_back(e.begin(), e.end());
  return convex_hull(pts);
}

bool is_reflexive(const LatticePolytope& p) {
  if (!p.full_dimensional())
    throw DomainError("reflexivity requires a full-dimensional polytope (dimension " +
                      std::to_string(p.dimension) + " in " + std::to_string(p.ambient) + ")");
  return std::all_of(p.facets.begin(), p.facets.end(), [](const Facet& f) { return f.offset == 1; });
}

bool same_polytope(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  std::vector<std::string> torus = f.torus_variables();
  for (const auto& v : g.torus_variables()) torus.push_back(v);
  std::sort(torus.begin(), torus.end());
  torus.erase(std::unique(torus.begin(), torus.end()), torus.end());
  return newton_polytope(f.embed_torus(torus)).vertices == newton_polytope(g.embed_torus(torus)).vertices;
}

}  // namespace lglab
