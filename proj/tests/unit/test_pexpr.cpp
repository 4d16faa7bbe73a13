// Formal p-expression layer: parsing, weights, homogeneity, the formal
// derivative, and cofactor expansion.

#include <doctest.h>

#include <stdexcept>

#include "trigsigma/pexpr.hpp"

using namespace trigsigma;

TEST_CASE("symbol weights") {
  CHECK(symbol_weight("p33") == -2);
  CHECK(symbol_weight("p11") == -10);
  CHECK(symbol_weight("p2233") == -6);
  CHECK(symbol_weight("Q1333") == -8);
  CHECK(symbol_weight("dQ1333_3") == -9);
  CHECK(symbol_weight("m11") == -6);
  CHECK(symbol_weight("m12") == -9);
  CHECK(symbol_weight("m13") == -10);
  CHECK(symbol_weight("m22") == -12);
  CHECK(symbol_weight("m23") == -13);
  CHECK(symbol_weight("m33") == -14);
  CHECK(symbol_weight("x") == -3);
  CHECK(symbol_weight("y") == -4);
  CHECK(symbol_weight("mu12") == -12);
  CHECK_THROWS_AS(symbol_weight("mu7"), std::invalid_argument);
  CHECK_THROWS_AS(symbol_weight("p31"), std::invalid_argument);  // unsorted
  CHECK_THROWS_AS(symbol_weight("p4"), std::invalid_argument);
  CHECK_THROWS_AS(symbol_weight("bogus"), std::invalid_argument);
}

TEST_CASE("parsing and normalization") {
  const auto e = PExpression::parse("6*p33^2 + mu1^2*p33 - 3*p22 + 2*mu1*p23 - 4*mu2*p33 - 2*mu4");
  CHECK(e.terms().size() == 6);
  int w = 0;
  CHECK(e.is_homogeneous(&w));
  CHECK(w == -4);
  // like terms merge; subtraction cancels
  CHECK(PExpression::parse("p33 + p33 - 2*p33").is_zero());
  CHECK(PExpression::parse("1/2*p23 + 1/3*p23") == PExpression::parse("5/6*p23"));
  // parenthesized groups and unary minus
  CHECK(PExpression::parse("-(p33 - p22)*2") == PExpression::parse("2*p22 - 2*p33"));
  CHECK(PExpression::parse("(p33 + p22)^2") ==
        PExpression::parse("p33^2 + 2*p22*p33 + p22^2"));
  CHECK_THROWS_AS(PExpression::parse("p33 +"), std::invalid_argument);
  CHECK_THROWS_AS(PExpression::parse("zeta"), std::invalid_argument);
  CHECK_THROWS_AS(PExpression::parse("p33 p22"), std::invalid_argument);
}

TEST_CASE("inhomogeneous expressions are detected") {
  CHECK_FALSE(PExpression::parse("p33 + p22").is_homogeneous());
  CHECK(PExpression::parse("p33*mu2 + p22 + p23*mu1").is_homogeneous());
}

TEST_CASE("formal derivative follows the product rule") {
  CHECK(PExpression::parse("p33").derivative(1) == PExpression::parse("p133"));
  CHECK(PExpression::parse("p33^2").derivative(3) == PExpression::parse("2*p33*p333"));
  CHECK(PExpression::parse("p23*p33").derivative(2) ==
        PExpression::parse("p223*p33 + p23*p233"));
  CHECK(PExpression::parse("mu4*p33").derivative(3) == PExpression::parse("mu4*p333"));
  CHECK(PExpression::parse("Q1333").derivative(3) == PExpression::parse("dQ1333_3"));
  CHECK_THROWS_AS(PExpression::parse("x*p33").derivative(3), std::domain_error);
  CHECK_THROWS_AS(PExpression::parse("m11").derivative(3), std::domain_error);
  // after minor expansion the derivative is defined
  CHECK(PExpression::parse("m11").expand_minors().derivative(1) ==
        PExpression::parse("p122*p33 + p22*p133 - 2*p23*p123"));
}

TEST_CASE("minor expansion uses the unsigned complementary minors") {
  CHECK(PExpression::symbol("m12").expand_minors() ==
        PExpression::parse("p12*p33 - p13*p23"));
  CHECK(PExpression::symbol("m23").expand_minors() ==
        PExpression::parse("p11*p23 - p12*p13"));
  CHECK(PExpression::symbol("m13").expand_minors() ==
        PExpression::parse("p12*p23 - p22*p13"));
}

TEST_CASE("zeta grades match the automorphism action") {
  CHECK(symbol_zeta_grade("x") == 0);
  CHECK(symbol_zeta_grade("y") == 1);
  CHECK(symbol_zeta_grade("mu3") == 0);
  CHECK(symbol_zeta_grade("mu4") == 1);
  CHECK(symbol_zeta_grade("mu8") == 2);
  CHECK(symbol_zeta_grade("p33") == 2);   // -(2+2) mod 3
  CHECK(symbol_zeta_grade("p23") == 0);   // -(1+2) mod 3
  CHECK(symbol_zeta_grade("p11") == 1);   // -(1+1) mod 3
  CHECK(symbol_zeta_grade("Q1333") == 2); // -(1+2+2+2) mod 3
  CHECK(symbol_zeta_grade("dQ1333_3") == 0);
  // every minor symbol's grade agrees with its p-expansion
  for (const char* m : {"m11", "m12", "m13", "m22", "m23", "m33"}) {
    int g1 = -1, g2 = -2;
    CHECK(PExpression::symbol(m).is_zeta_homogeneous(&g1));
    CHECK(PExpression::symbol(m).expand_minors().is_zeta_homogeneous(&g2));
    CHECK(g1 == g2);
  }
  // inversion identity kl1 is grade-homogeneous: p33*y + p23*x + p13 = x^2
  int g = -1;
  CHECK(PExpression::parse("p33*y + p23*x + p13 - x^2").is_zeta_homogeneous(&g));
  CHECK(g == 0);
}

TEST_CASE("minor expansion is homogeneous with the declared weights") {
  for (const char* m : {"m11", "m12", "m13", "m22", "m23", "m33"}) {
    const auto e = PExpression::symbol(m).expand_minors();
    int w = 0;
    CHECK(e.is_homogeneous(&w));
    CHECK(w == symbol_weight(m));
  }
}

TEST_CASE("pole orders for denominator clearing") {
  CHECK(PExpression::parse("p33").max_pole_order() == 2);
  CHECK(PExpression::parse("p333").max_pole_order() == 3);
  CHECK(PExpression::parse("p33*p22 + p2233").max_pole_order() == 4);
  CHECK(PExpression::parse("Q1333 + p13*p33").max_pole_order() == 4);
  CHECK(PExpression::parse("Q1333").max_pole_order() == 2);
  CHECK(PExpression::parse("m12*p222").max_pole_order() == 6);
  CHECK(PExpression::parse("dQ1333_3*p13").max_pole_order() == 5);
  CHECK(PExpression::parse("x^2*y").max_pole_order() == 0);
}
