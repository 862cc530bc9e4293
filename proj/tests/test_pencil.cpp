#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lglab/error.hpp"
#include "lglab/pencil.hpp"

#include <random>

using namespace lglab;

namespace {

const char* k212 = "(x+y)*(y+z)*(z+1)*(x+2)/(x*y*z)";
const char* k16 = "(x+z+1)*(x+y+z+1)*(z+1)*(y+z)/(x*y*z)";
const char* k32 = "(x+y+1)*(1/z + z/y + b*(x+y+1)*(a*x+y+1)/(x*y))";

Polynomial P(const std::string& s) {
  return LaurentPolynomial::parse(s).numerator().embed(pencil_variables());
}

QuarticPencil pencil(const std::string& s) { return homogenize(LaurentPolynomial::parse(s)); }

QuarticPencil pencil32(long a, long b) {
  auto f = LaurentPolynomial::parse(k32, {"a", "b"}).specialize({{"a", a}, {"b", b}});
  return homogenize(f);
}

BaseCurve curve(const BaseLocusReport& r, const std::string& label) {
  for (const auto& [c, m] : r.curves)
    if (c.label == label) return c;
  FAIL("missing curve " << label);
  return {};
}

}  // namespace

TEST_CASE("homogenize") {
  CHECK(pencil(k212).F == P("(x+y)*(y+z)*(z+t)*(2*t+x)"));
  CHECK(pencil("(x+y+1)^3/(x*y*z)+z").F == P("(x+y+t)^3*t + x*y*z^2"));
  CHECK_THROWS_AS(pencil("(x+y+z+1)^6/(x*y*z)"), DomainError);
  CHECK_THROWS_AS(pencil("x+y"), DomainError);
  CHECK_THROWS_AS(homogenize(LaurentPolynomial::parse("a*x+y+z+1/(x*y*z)", {"a"})), ParameterError);
  auto p = pencil(k16);
  auto dehom = p.F.evaluate_at(3, 1);
  CHECK(dehom == P("(x+z+1)*(x+y+z+1)*(z+1)*(y+z)"));
}

TEST_CASE("base locus of the 2-12 pencil at a=2") {
  auto r = base_locus(pencil(k212));
  CHECK(r.curves.size() == 12);
  for (const auto& [c, m] : r.curves) {
    bool doubled = c.label == "L{x; y}" || c.label == "L{y; z}" || c.label == "L{x; t}" || c.label == "L{z; t}";
    CHECK_MESSAGE(m == (doubled ? 2 : 1), c.label);
    CHECK(c.is_line());
  }
  for (const auto& s : r.hyperplane_sections) {
    int deg = 0;
    for (const auto& [label, e] : s.components) deg += e * curve(r, label).degree();
    CHECK(deg == 4);
  }
}

TEST_CASE("base locus and multiplicities of the 1-6 pencil") {
  auto p = pencil(k16);
  auto r = base_locus(p);
  CHECK(r.curves.size() == 12);
  CHECK(r.multiplicity("L{x; z + t}") == 2);
  CHECK(r.multiplicity("L{y; x + z + t}") == 2);
  CHECK(r.multiplicity("L{y; z}") == 2);
  CHECK(r.multiplicity("L{z; t}") == 2);
  CHECK(member_multiplicity(p, curve(r, "L{x; z + t}"), 0) == 2);
  CHECK(member_multiplicity(p, curve(r, "L{y; x + z + t}"), 0) == 2);
  for (const auto& [c, m] : r.curves)
    if (c.label != "L{x; z + t}" && c.label != "L{y; x + z + t}") CHECK(member_multiplicity(p, c, 0) == 1);
  CHECK(exceptional_count(2, member_multiplicity(p, curve(r, "L{x; z + t}"), 0)) == 1);
}

TEST_CASE("member multiplicity on the 2-12 pencil") {
  auto p = pencil(k212);
  auto r = base_locus(p);
  CHECK(member_multiplicity(p, curve(r, "L{x; y}"), 0) == 1);
  CHECK(member_multiplicity(p, curve(r, "L{x; y}"), 5) == 1);
}

TEST_CASE("exceptional count") {
  CHECK(exceptional_count(2, 2) == 1);
  CHECK(exceptional_count(2, 1) == 0);
  CHECK(exceptional_count(3, 3) == 2);
  CHECK(exceptional_count(3, 0) == 0);
  CHECK_THROWS_AS(exceptional_count(1, 2), InvariantError);
}

TEST_CASE("reducible fibers and fiber reports") {
  auto p = pencil(k212);
  auto red = find_reducible_lambdas(p, {0, 1, 16, -3, 0});
  REQUIRE(red.size() == 1);
  CHECK(red[0].lambda == 0);
  CHECK(red[0].factors.distinct() == 4);
  CHECK_THROWS_AS(find_reducible_lambdas(p, {}), DomainError);

  auto f0 = fiber_report(p, 0);
  CHECK(f0.s_components.distinct() == 4);
  CHECK(f0.rho == 4);
  CHECK(f0.reduced);
  for (const auto& c : f0.curves) CHECK(c.C == 0);

  auto g = fiber_report(p, 7);
  CHECK(g.rho == 1);
  CHECK(g.reduced);

  auto q = pencil(k16);
  CHECK(find_reducible_lambdas(q, {0})[0].factors.distinct() == 4);
  std::vector<Annotation> ann{{"1-6", 0, {0, 0, 1, -1}, 1, "resolution of P3"},
                              {"1-6", 0, {1, 0, 0, -1}, 1, "resolution of P6"},
                              {"1-6", 5, {1, 0, 0, -1}, 9, "other fiber"}};
  auto f16 = fiber_report(q, 0, ann);
  CHECK(f16.automated_rho == 6);
  CHECK(f16.rho == 8);
  CHECK(f16.annotated);
  CHECK(f16.points.size() == 2);
}

TEST_CASE("non-reduced torus fibers") {
  auto a = detect_nonreduced_torus(LaurentPolynomial::parse("(x+y+z+1)^4/(x*y*z)"), 0);
  REQUIRE(a);
  CHECK(a->multiplicity == 4);
  CHECK(a->factor == LaurentPolynomial::parse("x+y+z+1").numerator());
  auto b = detect_nonreduced_torus(LaurentPolynomial::parse("(x+y+z+1)^6/(x*y*z)"), 0);
  REQUIRE(b);
  CHECK(b->multiplicity == 6);
  CHECK_FALSE(detect_nonreduced_torus(LaurentPolynomial::parse(k212), 0));
  auto p = homogenize(LaurentPolynomial::parse("(x+y+z+1)^3*(x+1)/(x*y*z)"));
  auto rep = fiber_report(p, 0);
  CHECK_FALSE(rep.reduced);
  CHECK(detect_nonreduced_torus(LaurentPolynomial::parse("(x+y+z+1)^3*(x+1)/(x*y*z)"), 0)->multiplicity == 3);
}

TEST_CASE("fixed singular points") {
  auto s16 = fixed_singular_points(pencil(k16));
  std::vector<ProjectivePoint> expect16{{0, 1, -1, 0}, {0, 1, 0, 0}, {0, 0, 1, -1}, {1, 0, -1, 0},
                                        {1, 0, 0, 0},  {1, 0, 0, -1}, {1, -1, 0, 0}};
  std::sort(expect16.begin(), expect16.end());
  CHECK(s16.points == expect16);
  CHECK(s16.singular_lines.empty());

  auto s32 = fixed_singular_points(pencil32(2, 3));
  std::vector<ProjectivePoint> expect32{{0, 0, 1, 0}, {0, 1, 0, -1}, {1, -1, 0, 0}, {1, 0, 0, -1}};
  std::sort(expect32.begin(), expect32.end());
  CHECK(s32.points == expect32);
  CHECK(to_string(expect32[0]) == "[0:0:1:0]");
}

TEST_CASE("3-2 base locus") {
  auto p = pencil32(2, 3);
  auto r = base_locus(p);
  CHECK(r.multiplicity("L{x; y + t}") == 3);
  CHECK(r.multiplicity("L{x; z}") == 2);
  CHECK(r.multiplicity("C{y; deg 2}") == 1);
  CHECK(r.multiplicity("C{t; deg 2}") == 1);
  CHECK(member_multiplicity(p, curve(r, "L{x; y + t}"), 0) == 2);
  CHECK(member_multiplicity(p, curve(r, "C{y; deg 2}"), 0) == 1);
  auto labels = [](const BaseLocusReport& b) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& [c, m] : b.curves) out.emplace_back(c.label, m);
    return out;
  };
  CHECK(labels(base_locus(pencil32(5, 7))) == labels(r));
}

TEST_CASE("M <= m on random members") {
  std::mt19937 rng(5);
  for (auto p : {pencil(k212), pencil(k16), pencil32(2, 3)}) {
    auto r = base_locus(p);
    for (int trial = 0; trial < 4; ++trial) {
      Rational lambda(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 3) + 1);
      lambda.canonicalize();
      for (const auto& [c, m] : r.curves) CHECK(member_multiplicity(p, c, lambda) <= m);
      CHECK(fiber_report(p, lambda + 1000).rho == 1);
    }
  }
}
