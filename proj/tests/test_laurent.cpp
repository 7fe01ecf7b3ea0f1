#include <doctest.h>

#include "knotgrid/laurent.hpp"

using knotgrid::LaurentPolynomial;

TEST_CASE("terms with zero coefficients are never stored") {
  LaurentPolynomial p;
  p.add_term(2, 3);
  p.add_term(2, -3);
  CHECK(p.is_zero());
  CHECK(p == LaurentPolynomial());
}

TEST_CASE("ring operations") {
  const LaurentPolynomial t = LaurentPolynomial::monomial(1, 1);
  const LaurentPolynomial tinv = LaurentPolynomial::monomial(1, -1);
  const LaurentPolynomial p = t + tinv - LaurentPolynomial::one();  // t - 1 + t^-1
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(0) == -1);
  CHECK(p.coeff(-1) == 1);
  CHECK(p.coeff(5) == 0);

  const LaurentPolynomial sq = p * p;
  CHECK(sq.coeff(2) == 1);
  CHECK(sq.coeff(1) == -2);
  CHECK(sq.coeff(0) == 3);
  CHECK(sq.coeff(-1) == -2);
  CHECK(sq.coeff(-2) == 1);

  CHECK(p.scaled(2, 3).coeff(4) == 2);
  CHECK((p - p).is_zero());
}

TEST_CASE("evaluation at the units") {
  LaurentPolynomial p;  // t - 1 + t^-1
  p.add_term(1, 1);
  p.add_term(0, -1);
  p.add_term(-1, 1);
  CHECK(p.evaluate_at_sign(1) == 1);
  CHECK(p.evaluate_at_sign(-1) == -3);
  CHECK_THROWS(p.evaluate_at_sign(2));
}

TEST_CASE("palindromic detection") {
  LaurentPolynomial sym;
  sym.add_term(1, 7);
  sym.add_term(-1, 7);
  sym.add_term(0, -2);
  CHECK(sym.is_palindromic());
  sym.add_term(2, 1);
  CHECK_FALSE(sym.is_palindromic());
}

TEST_CASE("pretty printing") {
  LaurentPolynomial jones;  // -t^-4 + t^-3 + t^-1 over quarter exponents
  jones.add_term(-16, -1);
  jones.add_term(-12, 1);
  jones.add_term(-4, 1);
  CHECK(jones.to_string("t", 4) == "-t^-4 + t^-3 + t^-1");
  CHECK(LaurentPolynomial().to_string("t") == "0");
  CHECK(LaurentPolynomial::one().to_string("t") == "1");
  CHECK(LaurentPolynomial::monomial(-2, 2).to_string("A") == "-2*A^2");
}
