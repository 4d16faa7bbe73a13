// Polynomial/series kernel: canonical ordering, graded truncation, exact
// division, inverses, substitution and serialization round trips.

#include <doctest.h>

#include <stdexcept>

#include "trigsigma/tables.hpp"
#include "trigsigma/wpoly.hpp"
#include "trigsigma/wpoly_json.hpp"

using namespace trigsigma;

namespace {
using P = WeightedPoly<Rational>;
using S = TruncatedSeries<Rational>;

ExpVec ev(std::initializer_list<int> xs) {
  ExpVec e = zero_exp();
  std::size_t i = 0;
  for (int x : xs) e[i++] = static_cast<std::int16_t>(x);
  return e;
}
}  // namespace

TEST_CASE("canonical term order: weight ascending, exponent-lex tie break") {
  auto tab = u_table(false);  // u1(5) u2(2) u3(1)
  P p(tab);
  p.push_term(ev({0, 0, 5}), Rational(1));  // w5  u3^5
  p.push_term(ev({1, 0, 0}), Rational(2));  // w5  u1
  p.push_term(ev({0, 1, 0}), Rational(3));  // w2  u2
  p.push_term(ev({0, 1, 3}), Rational(4));  // w5  u2 u3^3
  p.push_term(ev({0, 0, 2}), Rational(5));  // w2  u3^2
  p.normalize();
  REQUIRE(p.nterms() == 5);
  // weight 2 first, tie broken by ascending exponent tuples: (0,0,2) before
  // (0,1,0); then weight 5 in the same order (0,0,5) < (0,1,3) < (1,0,0).
  CHECK(p.terms()[0].e == ev({0, 0, 2}));
  CHECK(p.terms()[1].e == ev({0, 1, 0}));
  CHECK(p.terms()[2].e == ev({0, 0, 5}));
  CHECK(p.terms()[3].e == ev({0, 1, 3}));
  CHECK(p.terms()[4].e == ev({1, 0, 0}));
}

TEST_CASE("normalize merges duplicates and drops zeros") {
  auto tab = u_table(false);
  P p(tab);
  p.push_term(ev({1, 0, 0}), Rational(2));
  p.push_term(ev({1, 0, 0}), Rational(-2));
  p.push_term(ev({0, 1, 0}), Rational(1, 2));
  p.push_term(ev({0, 1, 0}), Rational(1, 3));
  p.normalize();
  REQUIRE(p.nterms() == 1);
  CHECK(p.terms()[0].c == Rational(5, 6));
}

TEST_CASE("arithmetic and truncated multiplication") {
  auto tab = u_table(false);
  const P u1 = P::variable(tab, 0);
  const P u2 = P::variable(tab, 1);
  const P u3 = P::variable(tab, 2);
  const P a = u1 + u2 * u3;          // weight 5 + weight 3
  const P b = u3 * u3 - u2;          // weight 2
  CHECK((a * b).nterms() == 4);
  CHECK((a - a).is_zero());
  // truncated product keeps only weight <= 6
  const P ab6 = P::mul(a, b, 6);
  CHECK(ab6.nterms() == 2);  // u2*u3*u3^2 (w5), u2*u2*u3 (w5)... both weight 5
  for (const auto& t : ab6.terms()) CHECK(t.wpos <= 6);
  // coefficient lookup
  CHECK((a * b).coefficient(ev({1, 0, 2})) == Rational(1));
  CHECK((a * b).coefficient(ev({1, 1, 0})) == Rational(-1));
  CHECK((a * b).coefficient(ev({0, 0, 1})) == Rational(0));
}

TEST_CASE("derivative") {
  auto tab = u_table(false);
  const P u1 = P::variable(tab, 0);
  const P u3 = P::variable(tab, 2);
  const P p = u1 * u1 * u3 + u3 * u3 * u3;
  const P d1 = p.derivative(0);
  CHECK(d1.coefficient(ev({1, 0, 1})) == Rational(2));
  const P d3 = p.derivative(2);
  CHECK(d3.coefficient(ev({2, 0, 0})) == Rational(1));
  CHECK(d3.coefficient(ev({0, 0, 2})) == Rational(3));
  // mixed partials commute
  CHECK(p.derivative(0).derivative(2) == p.derivative(2).derivative(0));
}

TEST_CASE("homogeneity with parameter weights") {
  auto tab = u_table(true);  // + mu's
  const std::size_t mu1 = tab->index_of("mu1");
  P p(tab);
  ExpVec e = zero_exp();
  e[tab->index_of("u1")] = 1;
  e[mu1] = 1;  // u1*mu1: total weight 4, positive weight 5
  p.push_term(e, Rational(1));
  p.normalize();
  int w = 0;
  CHECK(p.is_homogeneous(&w));
  CHECK(w == 4);
  CHECK(p.terms()[0].wpos == 5);
  // truncation ignores mu exponents
  CHECK(!p.truncated(5).is_zero());
  CHECK(p.truncated(4).is_zero());
}

TEST_CASE("exact division succeeds exactly when divisible") {
  auto tab = u_table(false);
  const P u1 = P::variable(tab, 0);
  const P u2 = P::variable(tab, 1);
  const P u3 = P::variable(tab, 2);
  const P d = u1 - u2 * u3 + u3 * u3 * u3;
  const P q = u2 * u2 - u1 * u3 + P::constant(tab, Rational(3, 7));
  CHECK(divide_exact(d * q, d) == q);
  CHECK(divide_exact(d * d * q, d * d) == q);
  CHECK_THROWS_AS(divide_exact(d * q + u3, d), std::domain_error);
  CHECK_THROWS_AS(divide_exact(u1, P::zero(tab)), std::domain_error);
}

TEST_CASE("truncated series: cutoff discipline and honest validity") {
  auto tab = make_table({{"t", 1, -8}});
  const P t = P::variable(tab, 0);
  const S a(P::constant(tab, Rational(1)) + t, 6);
  const S b(t * t, 6);
  CHECK((a + b).cutoff() == 6);
  CHECK((a * b).cutoff() == 6);
  CHECK_THROWS_AS(a + S(t, 5), std::invalid_argument);
  CHECK_THROWS_AS(a.retruncated(7), std::invalid_argument);
  // A Laurent factor t^-3 lowers the validity of a product by 3.
  const S c(P::variable(tab, 0, -3), 6);
  const S ac = a * c;
  CHECK(ac.cutoff() == 3);
  CHECK(ac.poly().coefficient(ev({-3})) == Rational(1));
  CHECK(ac.poly().coefficient(ev({-2})) == Rational(1));
}

TEST_CASE("series inverses") {
  auto tab = make_table({{"t", 1, -8}});
  const P one = P::constant(tab, Rational(1));
  const P t = P::variable(tab, 0);

  SUBCASE("unit inverse: geometric series") {
    const S s(one - t, 10);
    const S inv = inverse_unit(s);
    for (int k = 0; k <= 10; ++k) CHECK(inv.poly().coefficient(ev({k})) == Rational(1));
    const S prod = s * inv;
    CHECK(prod.poly() == one.truncated(10));
  }
  SUBCASE("unit inverse requires constant leading slice") {
    CHECK_THROWS_AS(inverse_unit(S(t + t * t, 5)), std::domain_error);
  }
  SUBCASE("monomial-unit inverse of Laurent leading term") {
    // s = t^-3 (1 - t): 1/s = t^3 * (1 + t + t^2 + ...)
    const S s(P::variable(tab, 0, -3) - P::variable(tab, 0, -2), 6);
    const S inv = inverse_monomial_unit(s);
    CHECK(inv.cutoff() == 12);
    CHECK(inv.poly().coefficient(ev({3})) == Rational(1));
    CHECK(inv.poly().coefficient(ev({4})) == Rational(1));
    CHECK(inv.poly().coefficient(ev({12})) == Rational(1));
  }
}

TEST_CASE("rename and substitute") {
  auto small = u_table(false);
  auto big = uv_table(false);
  const P u1 = P::variable(small, 0);
  const P u3 = P::variable(small, 2);
  const P p = u1 * u3 + u3 * u3;

  SUBCASE("lift by name into the two-point table") {
    const P lifted = lift_by_name(p, big);
    CHECK(lifted.table() == big);
    CHECK(lifted.coefficient(ev({1, 0, 1, 0, 0, 0})) == Rational(1));
  }
  SUBCASE("substitute u3 -> v3 + u3 (series shift)") {
    std::vector<std::optional<P>> bind(small->size());
    bind[2] = P::variable(big, 2) + P::variable(big, 5);
    const P shifted = substitute(p, big, bind);
    CHECK(shifted.coefficient(ev({1, 0, 0, 0, 0, 1})) == Rational(1));  // u1*v3
    CHECK(shifted.coefficient(ev({0, 0, 1, 0, 0, 1})) == Rational(2));  // 2 u3 v3
  }
  SUBCASE("negative power of a monomial image") {
    auto chart = make_table({{"t", 1, -30}});
    auto xytab = make_table({{"x", -3, 0}});
    std::vector<std::optional<P>> bind(1);
    bind[0] = P::variable(chart, 0, -3);  // x -> t^-3
    P x2(xytab);
    ExpVec e = zero_exp();
    e[0] = -2;  // x^-2 (admissible only through substitution)
    x2.push_term(e, Rational(5));
    x2.normalize();
    const P img = substitute(x2, chart, bind);
    CHECK(img.coefficient(ev({6})) == Rational(5));
  }
}

TEST_CASE("json round trip is canonical and exact") {
  auto tab = u_table(true);
  P p(tab);
  ExpVec e1 = zero_exp();
  e1[0] = 1;
  P q = P::monomial(tab, e1, Rational(-1, 3));
  ExpVec e2 = zero_exp();
  e2[2] = 3;
  e2[tab->index_of("mu2")] = 1;
  q += P::monomial(tab, e2, Rational(22, 7));
  const Json j = poly_to_json(q);
  const P back = poly_from_json<Rational>(j);
  CHECK(back == q);
  CHECK(poly_to_json(back).dump() == j.dump());

  // Eisenstein coefficients
  using PE = WeightedPoly<Eisenstein>;
  PE pe(tab);
  pe.push_term(e1, Eisenstein(Rational(1, 2), Rational(-3)));
  pe.normalize();
  const Json je = poly_to_json(pe);
  CHECK(poly_from_json<Eisenstein>(je) == pe);
  CHECK(je["terms"][0]["coeff"]["b"] == "-3");
}

TEST_CASE("table sanity checks") {
  CHECK(u_table(true)->size() == 12);
  CHECK(uv_table(true)->size() == 15);
  CHECK(uv_table(true, true)->size() == 10);
  CHECK(xzyw_table(true)->size() == 13);
  CHECK(u_table(true)->weight(u_table(true)->index_of("mu12")) == -12);
  CHECK_THROWS_AS(make_table({{"a", 1, 0}, {"a", 2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(u_table(false)->index_of("nope"), std::invalid_argument);
}
