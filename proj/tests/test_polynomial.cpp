#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chromakac/errors.hpp"
#include "chromakac/polynomial.hpp"

using namespace chromakac;

TEST_CASE("construction trims trailing zeros") {
  Polynomial p({0, 2, -3, 1, 0, 0});
  CHECK(p.degree() == 3);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(5) == 0);
  CHECK(Polynomial({0, 0}).is_zero());
  CHECK(Polynomial().degree() == -1);
}

TEST_CASE("arithmetic") {
  Polynomial a({1, 1});   // 1 + q
  Polynomial b({-1, 1});  // q - 1
  CHECK(a * b == Polynomial({-1, 0, 1}));
  CHECK(a + b == Polynomial({0, 2}));
  CHECK(a - a == Polynomial());
  CHECK(mpz_class(3) * a == Polynomial({3, 3}));
  CHECK(-b == Polynomial({1, -1}));
  CHECK(b.pow(2) == Polynomial({1, -2, 1}));
  CHECK(b.pow(0) == Polynomial::constant(1));
  CHECK(Polynomial::q_power(3) == Polynomial({0, 0, 0, 1}));
}

TEST_CASE("falling factorial") {
  CHECK(Polynomial::falling_factorial(0) == Polynomial::constant(1));
  CHECK(Polynomial::falling_factorial(1) == Polynomial({0, 1}));
  // q(q-1)(q-2) = q^3 - 3q^2 + 2q
  CHECK(Polynomial::falling_factorial(3) == Polynomial({0, 2, -3, 1}));
}

TEST_CASE("evaluation uses exact big integers") {
  Polynomial p({0, 2, -3, 1});
  CHECK(p(0) == 0);
  CHECK(p(1) == 0);
  CHECK(p(3) == 6);
  mpz_class big("1000000000000");
  // q^3 dominates: value has 36 digits
  CHECK(p(big) == big * big * big - 3 * big * big + 2 * big);
}

TEST_CASE("rendering") {
  CHECK(Polynomial({0, 2, -3, 1}).to_string() == "q^3 - 3q^2 + 2q");
  CHECK(Polynomial({0, 1}).to_string() == "q");
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial({5}).to_string() == "5");
  CHECK(Polynomial({-1, 0, 1}).to_string() == "q^2 - 1");
  CHECK(Polynomial({0, -4}).to_string() == "-4q");
  CHECK(Polynomial({0, 0, 7}).to_string() == "7q^2");
}

TEST_CASE("rational polynomials reduce and convert") {
  RationalPolynomial half({mpq_class(1, 2)});
  RationalPolynomial sum = half + half;
  CHECK(sum.is_integral());
  CHECK(sum.to_integer_polynomial("test") == Polynomial::constant(1));

  RationalPolynomial third({mpq_class(1, 3), mpq_class(2, 3)});
  CHECK_FALSE(third.is_integral());
  CHECK_THROWS_AS(third.to_integer_polynomial("test"), integrality_error);

  // (q/2 + 1/2)(2q - 1) = q^2 + q/2 - 1/2
  RationalPolynomial a({mpq_class(1, 2), mpq_class(1, 2)});
  RationalPolynomial b({mpq_class(-1), mpq_class(2)});
  CHECK(a * b == RationalPolynomial({mpq_class(-1, 2), mpq_class(1, 2), mpq_class(1)}));

  CHECK((mpq_class(0) * a).is_zero());
  CHECK(RationalPolynomial::from(Polynomial({1, 2})).coeff(1) == 2);
}
