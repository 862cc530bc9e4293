#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lglab/error.hpp"
#include "lglab/periods.hpp"

#include <map>
#include <random>

using namespace lglab;

namespace {

const char* kCubic = "(x+y+1)^3/(x*y*z)+z";

// Naive constant terms: repeated multiplication of exponent maps, no pruning.
std::vector<Rational> brute_periods(const LaurentPolynomial& f, int n) {
  auto terms = f.terms();
  std::map<LaurentExponents, Rational> cur{{LaurentExponents(f.torus_dimension(), 0), 1}};
  std::vector<Rational> out;
  for (int j = 0; j <= n; ++j) {
    auto it = cur.find(LaurentExponents(f.torus_dimension(), 0));
    out.push_back(it == cur.end() ? Rational(0) : it->second);
    std::map<LaurentExponents, Rational> next;
    for (const auto& [e, c] : cur)
      for (const auto& [g, d] : terms) {
        LaurentExponents s = e;
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += g[k];
        next[s] += c * d;
      }
    cur.clear();
    for (auto& [e, c] : next)
      if (c != 0) cur.emplace(e, c);
  }
  return out;
}

DifferentialOperator op_d(long c) { return DifferentialOperator::theta() + DifferentialOperator::multiplier(UPoly::constant(c)); }

DifferentialOperator cubic_operator() {
  // D^3 - 12 t^2 (3D+2)(3D+4)(D+1)
  auto D = DifferentialOperator::theta();
  auto three = DifferentialOperator::multiplier(UPoly::constant(3));
  auto rhs = DifferentialOperator::multiplier(UPoly::monomial(2, 12)) * (three * D + DifferentialOperator::multiplier(UPoly::constant(2))) *
             (three * D + DifferentialOperator::multiplier(UPoly::constant(4))) * op_d(1);
  return (D * D * D - rhs).normalized();
}

MonomialMap random_unimodular(std::mt19937& rng, int n) {
  MonomialMap m = MonomialMap::identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-2, 2);
  for (int step = 0; step < 6; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int c = coef(rng);
    for (int r = 0; r < n; ++r) m.matrix[r][j] += c * m.matrix[r][i];
  }
  if (rng() % 2) std::swap(m.matrix[0], m.matrix[1]);
  return m;
}

}  // namespace

TEST_CASE("cubic periods match the closed form and a naive oracle") {
  auto f = LaurentPolynomial::parse(kCubic);
  auto seq = period_sequence(f, 16);
  auto naive = brute_periods(f, 16);
  REQUIRE(seq.length() == 17);
  for (int j = 0; j <= 16; ++j) {
    CHECK(seq.coefficients[j] == naive[j]);
    if (j % 2) {
      CHECK(seq.coefficients[j] == 0);
    } else {
      unsigned k = j / 2;
      Integer k5 = factorial(k) * factorial(k) * factorial(k) * factorial(k) * factorial(k);
      CHECK(seq.coefficients[j] == Rational(factorial(2 * k) * factorial(3 * k)) / Rational(k5));
    }
  }
}

TEST_CASE("small period examples") {
  auto a = period_sequence(LaurentPolynomial::parse("x+y+1/(x*y)"), 6);
  CHECK(a.coefficients[3] == 6);
  CHECK(a.coefficients[6] == 90);
  CHECK(a.coefficients[1] == 0);
  auto b = period_sequence(LaurentPolynomial::parse("x"), 3);
  CHECK(b.coefficients == std::vector<Rational>{1, 0, 0, 0});
  auto c = period_sequence(LaurentPolynomial::parse("x+1/x+2*y+1/y+1"), 8);
  CHECK(c.coefficients == brute_periods(LaurentPolynomial::parse("x+1/x+2*y+1/y+1"), 8));
  CHECK_THROWS_AS(period_sequence(LaurentPolynomial::parse("a*x+1/x", {"a"}), 3), ParameterError);
}

TEST_CASE("apply_operator examples") {
  PeriodSequence ones{{1, 1, 1}, "ones"};
  CHECK(apply_operator(DifferentialOperator::theta(), ones).coefficients == std::vector<Rational>{0, 1, 2});
  PeriodSequence delta{{1, 0, 0}, "delta"};
  auto tD = DifferentialOperator::multiplier(UPoly::monomial(1)) * DifferentialOperator::theta();
  for (const auto& v : apply_operator(tD, delta).coefficients) CHECK(v == 0);
}

TEST_CASE("operator arithmetic") {
  auto D = DifferentialOperator::theta();
  auto t = DifferentialOperator::multiplier(UPoly::monomial(1));
  // D t = t (D + 1)
  CHECK(D * t == t * op_d(1));
  CHECK(cubic_operator().to_string() == "(-108*t^2 + 1)*D^3 - 324*t^2*D^2 - 312*t^2*D - 96*t^2");
}

TEST_CASE("geometric series") {
  PeriodSequence ones{std::vector<Rational>(60, 1), "geometric"};
  auto L = find_picard_fuchs(ones, {2, 2, 20});
  auto expect = (DifferentialOperator::theta() - DifferentialOperator::multiplier(UPoly::monomial(1)) * op_d(1)).normalized();
  CHECK(L == expect);
}

TEST_CASE("cubic operator recovery, minimality and guard re-verification") {
  auto f = LaurentPolynomial::parse(kCubic);
  auto seq = period_sequence(f, 59);
  auto L = find_picard_fuchs(seq, {4, 5, 20});
  CHECK(L == cubic_operator());
  CHECK(L.order() == 3);
  CHECK(L.degree() == 2);
  for (int r = 1; r < 3; ++r)
    for (int d = 0; d <= 8; ++d) CHECK_FALSE(has_annihilator(seq, r, d, 20));
  for (int d = 0; d < 2; ++d) CHECK_FALSE(has_annihilator(seq, 3, d, 20));
  CHECK(annihilates(L, period_sequence(f, 79)));
  CHECK_FALSE(annihilates(L + DifferentialOperator::multiplier(UPoly::monomial(3)), seq));

  PeriodSequence short_seq{std::vector<Rational>(seq.coefficients.begin(), seq.coefficients.begin() + 30), "short"};
  CHECK_THROWS_AS(find_picard_fuchs(short_seq, {4, 5, 20}), DomainError);
  try {
    find_picard_fuchs(seq, {2, 5, 20});
    FAIL("expected NotFoundError");
  } catch (const NotFoundError& e) {
    CHECK(e.max_order() == 2);
    CHECK(e.max_degree() == 5);
  }
}

TEST_CASE("operator recovery for a shifted four-term model") {
  auto f = LaurentPolynomial::parse("(x+y+z+1)^2/x + (x+y+z+1)*(y+z+1)*(z+1)^2/(x*y*z)");
  auto seq = period_sequence(f, 59);
  CHECK(seq.coefficients[1] == 4);
  CHECK(seq.coefficients[3] == 760);
  auto L = find_picard_fuchs(seq, {4, 5, 20});
  auto D = DifferentialOperator::theta();
  auto c = [](long v) { return DifferentialOperator::multiplier(UPoly::constant(v)); };
  auto t = DifferentialOperator::multiplier(UPoly::monomial(1));
  auto expect = D * D * D - t * (c(2) * D + c(1)) * (c(13) * D * D + c(13) * D + c(4)) -
                c(3) * t * t * op_d(1) * (c(3) * D + c(4)) * (c(3) * D + c(2));
  CHECK(L == expect.normalized());
}

TEST_CASE("periods are invariant under unimodular monomial maps") {
  auto f = LaurentPolynomial::parse(kCubic);
  auto base = period_sequence(f, 29).coefficients;
  std::mt19937 rng(7);
  int tested = 0;
  while (tested < 20) {
    auto m = random_unimodular(rng, 3);
    long long det = m.determinant();
    REQUIRE((det == 1 || det == -1));
    CHECK(period_sequence(f.substitute_monomial(m), 29).coefficients == base);
    ++tested;
  }
}
