#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lglab/error.hpp"
#include "lglab/monodromy.hpp"

#include <random>

using namespace lglab;

namespace {

using Op = DifferentialOperator;

Op c(long v) { return Op::multiplier(UPoly::constant(v)); }
Op tpow(int k) { return Op::multiplier(UPoly::monomial(k)); }
const Op D = Op::theta();

Op cubic_operator() { return (D * D * D - tpow(2) * c(12) * (c(3) * D + c(2)) * (c(3) * D + c(4)) * (D + c(1))).normalized(); }

Op model_operator() {
  return (D * D * D - tpow(1) * (c(2) * D + c(1)) * (c(13) * D * D + c(13) * D + c(4)) -
          c(3) * tpow(2) * (D + c(1)) * (c(3) * D + c(4)) * (c(3) * D + c(2)))
      .normalized();
}

UPoly y_roots(std::vector<Rational> roots) { return UPoly::from_roots(roots); }

}  // namespace

TEST_CASE("derivative form of D^2") {
  auto a = derivative_form(D * D);
  REQUIRE(a.size() == 3);
  CHECK(a[2] == UPoly::monomial(2));
  CHECK(a[1] == UPoly::monomial(1));
  CHECK(a[0].is_zero());
}

TEST_CASE("singular points of the cubic operator") {
  auto pts = singular_points(cubic_operator());
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].location == SingularPoint::Location::Rational);
  CHECK(pts[0].value == 0);
  CHECK(pts[1].location == SingularPoint::Location::Algebraic);
  CHECK(pts[1].minimal == UPoly({Rational(-1, 108), 0, 1}));
  CHECK(pts[2].location == SingularPoint::Location::Infinity);
  for (const auto& p : pts) CHECK(p.kind != SingularPoint::Kind::Irregular);
}

TEST_CASE("indicial data of the cubic operator at infinity") {
  auto L = cubic_operator();
  auto d = indicial_polynomial(L, SingularPoint::infinity());
  CHECK(d.rational_form == y_roots({1, Rational(2, 3), Rational(4, 3)}));
  CHECK(d.exponents == std::vector<Rational>{Rational(2, 3), 1, Rational(4, 3)});
  CHECK(classify_point(d).tag == MonodromyTag::QuasiUnipotentNonUnipotent);

  auto loc = localize(L, SingularPoint::infinity());
  // (108 - s^2) theta^3 - 324 theta^2 + 312 theta - 96
  CHECK(loc.coefficients[3].size() == 3);
  CHECK(loc.coefficients[3][0].coeff(0) == 108);
  CHECK(loc.coefficients[3][2].coeff(0) == -1);
  CHECK(loc.coefficients[2][0].coeff(0) == -12 * 27);
  CHECK(loc.coefficients[1][0].coeff(0) == 12 * 26);
  CHECK(loc.coefficients[0][0].coeff(0) == -12 * 8);
}

TEST_CASE("maximally unipotent point at the origin") {
  for (const auto& L : {cubic_operator(), model_operator()}) {
    auto d = indicial_polynomial(L, SingularPoint::at(0));
    CHECK(d.exponents == std::vector<Rational>{0, 0, 0});
    CHECK(classify_point(d).tag == MonodromyTag::Unipotent);
  }
  auto theta = localize(D, SingularPoint::at(0));
  CHECK(theta.to_string() == "(1)*theta");
}

TEST_CASE("conifold class of the cubic operator") {
  auto L = cubic_operator();
  auto d = indicial_polynomial(L, SingularPoint::algebraic(UPoly({-1, 0, 108})));
  CHECK(d.residual.empty());
  CHECK(d.rational_form.degree() == 6);
  for (const auto& e : d.exponents) CHECK(e >= 0);
  CHECK(d.exponents.size() == 3);
}

TEST_CASE("model operator over the fiber value 4") {
  auto L = model_operator();
  auto p = operator_point(SingularPoint::at(4), 5);
  REQUIRE(p.location == SingularPoint::Location::Rational);
  CHECK(p.value == -1);
  bool found = false;
  for (const auto& q : singular_points(L)) {
    auto f = fiber_point(q, 5);
    if (f.location == SingularPoint::Location::Rational && f.value == 4) found = true;
  }
  CHECK(found);
  auto d = indicial_polynomial(L, p);
  CHECK(d.exponents.size() == 3);
  CHECK(classify_point(d).tag == MonodromyTag::QuasiUnipotentNonUnipotent);
}

TEST_CASE("fiber mapping round trip") {
  auto q = SingularPoint::algebraic(UPoly({-1, 0, 108}));
  for (Rational s : {Rational(0), Rational(5), Rational(-3, 2)}) {
    CHECK(operator_point(fiber_point(q, s), s).same_location(q));
    CHECK(operator_point(fiber_point(SingularPoint::at(Rational(1, 27)), s), s).same_location(SingularPoint::at(Rational(1, 27))));
    CHECK(fiber_point(SingularPoint::infinity(), s).value == s);
  }
  CHECK(fiber_point(SingularPoint::at(0), 5).location == SingularPoint::Location::Infinity);
}

TEST_CASE("classification examples") {
  IndicialData d;
  d.exponents = {1, Rational(2, 3), Rational(4, 3)};
  CHECK(classify_point(d).tag == MonodromyTag::QuasiUnipotentNonUnipotent);
  d.exponents = {0, 1, 1};
  CHECK(classify_point(d).tag == MonodromyTag::Unipotent);
  d.exponents = {};
  d.residual = {UPoly({-2, 0, 1})};
  CHECK(classify_point(d).tag == MonodromyTag::NonQuasiUnipotent);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    IndicialData e;
    for (int k = 0; k < 3; ++k) e.exponents.push_back(Rational(static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 3)));
    auto base = classify_point(e).tag;
    long shift = static_cast<long>(rng() % 11) - 5;
    for (auto& x : e.exponents) x += shift;
    CHECK(classify_point(e).tag == base);
  }
}

TEST_CASE("geometric series operator") {
  auto L = (D - tpow(1) * (D + c(1))).normalized();
  auto pts = singular_points(L);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].kind == SingularPoint::Kind::ApparentCandidate);
  CHECK(pts[1].value == 1);
  CHECK(pts[1].kind == SingularPoint::Kind::RegularSingular);
  CHECK(pts[2].location == SingularPoint::Location::Infinity);
  CHECK(fuchs_relation_check(L));
}

TEST_CASE("ordinary points have exponents 0..r-1") {
  std::mt19937 rng(11);
  for (const auto& L : {cubic_operator(), model_operator()}) {
    for (int trial = 0; trial < 5; ++trial) {
      Rational q(static_cast<long>(rng() % 40) + 2, static_cast<long>(rng() % 5) + 1);
      q.canonicalize();
      auto d = indicial_polynomial(L, SingularPoint::at(q));
      CHECK(d.exponents == std::vector<Rational>{0, 1, 2});
    }
  }
}

TEST_CASE("infinity and origin swap under t -> 1/t") {
  auto L = cubic_operator();
  // substitute t = 1/z: p_i(1/z) (-D_z)^i, cleared of z powers
  std::vector<UPoly> q;
  int dmax = L.degree();
  for (int i = 0; i <= L.order(); ++i) {
    std::vector<Rational> cs;
    for (int k = 0; k <= dmax; ++k) cs.push_back(L.coefficient(i).coeff(dmax - k) * ((i % 2) ? -1 : 1));
    q.emplace_back(cs);
  }
  Op M(q);
  CHECK(indicial_polynomial(M, SingularPoint::at(0)).rational_form ==
        indicial_polynomial(L, SingularPoint::infinity()).rational_form);
  CHECK(indicial_polynomial(M, SingularPoint::infinity()).rational_form ==
        indicial_polynomial(L, SingularPoint::at(0)).rational_form);
}

TEST_CASE("Fuchs relation") {
  CHECK(fuchs_relation_check(cubic_operator()));
  CHECK(fuchs_relation_check(model_operator()));
  CHECK(fuchs_relation_check(D));
  auto pts = singular_points(cubic_operator());
  pts.erase(pts.begin() + 1);
  CHECK_FALSE(fuchs_relation_check(cubic_operator(), pts));
}

TEST_CASE("irregular points") {
  // t^2 d/dt - 1 = t D - 1 is irregular at 0
  auto L = tpow(1) * D - c(1);
  auto pts = singular_points(L);
  CHECK(pts[0].kind == SingularPoint::Kind::Irregular);
  CHECK_THROWS_AS(localize(L, SingularPoint::at(0)), UnsupportedError);
  CHECK_THROWS_AS(fuchs_relation_check(L), UnsupportedError);
  auto a = analyze_operator(L);
  CHECK(a[0].monodromy.tag == MonodromyTag::Indeterminate);
}
