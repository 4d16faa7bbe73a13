// Exact rational and Q(zeta) arithmetic: canonical forms, serialization
// round trips, field axioms on sampled values.

#include <doctest.h>

#include <stdexcept>

#include "trigsigma/eisenstein.hpp"
#include "trigsigma/rational.hpp"

using trigsigma::Eisenstein;
using trigsigma::Rational;

TEST_CASE("rational canonical form and serialization") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-7, 7).str() == "-1");
  CHECK(Rational::parse("22/7").str() == "22/7");
  CHECK(Rational::parse("-22/7").str() == "-22/7");
  CHECK(Rational::parse("10/4").str() == "5/2");
  CHECK(Rational::parse("-0").str() == "0");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("+1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((-a).str() == "-1/3");
  CHECK(a.sign() == 1);
  CHECK((-a).sign() == -1);
  CHECK(Rational(0).is_zero());
  CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
  // big values stay exact
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(10);
  CHECK((big / Rational(2)).str() == "5" + std::string(39, '0'));
}

TEST_CASE("eisenstein field arithmetic with zeta^2 = -1 - zeta") {
  const Eisenstein z = Eisenstein::zeta();
  CHECK(z * z == Eisenstein(Rational(-1), Rational(-1)));
  CHECK(z * z * z == Eisenstein(1));              // zeta^3 = 1
  CHECK((Eisenstein(1) + z + z * z).is_zero());   // 1 + zeta + zeta^2 = 0
  const Eisenstein a(Rational(2), Rational(-3));
  const Eisenstein b(Rational(1, 2), Rational(5));
  CHECK((a + b) - b == a);
  CHECK(a * b == b * a);
  CHECK(a * (b + z) == a * b + a * z);
  CHECK(a / a == Eisenstein(1));
  CHECK((a / b) * b == a);
  CHECK_THROWS_AS(a / Eisenstein(0), std::invalid_argument);
}

TEST_CASE("eisenstein conjugation and norm") {
  const Eisenstein z = Eisenstein::zeta();
  CHECK(z.conj() == z * z);                    // conj(zeta) = zeta^2
  const Eisenstein a(Rational(3, 7), Rational(-2, 5));
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).is_rational());
  CHECK((a * a.conj()).re() == a.norm());
  CHECK(a.norm() == Rational(9, 49) + Rational(6, 35) + Rational(4, 25));
  CHECK(Eisenstein(Rational(0), Rational(1)).norm() == Rational(1));
}
