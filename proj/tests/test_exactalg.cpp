#include "doctest.h"
#include "e7/parse.hpp"
#include "e7/polymatrix.hpp"
#include "e7/univariate.hpp"

using namespace e7;

TEST_CASE("parse and print round trip") {
  auto R = make_ring("x,y,z");
  auto p = parse_poly("x^3*y + y^3 - z^2", R);
  CHECK(p.size() == 3);
  CHECK(to_text(p) == "x^3*y + y^3 - z^2");
  CHECK(to_text(parse_poly("0", R)) == "0");
  CHECK(parse_poly(to_text(p), R) == p);
  auto Rw = make_ring("x,y", ExtField::eisenstein());
  CHECK(to_text(parse_poly("(-1/2)*w + w", Rw)) == "1/2*w");
  auto q = parse_poly("(x + w*y)^3 - 2/3*w^2*x", Rw);
  CHECK(parse_poly(to_text(q), Rw) == q);
  CHECK_THROWS_AS(parse_poly("x + q", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x + w", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x + (y", R), ParseError);
}

TEST_CASE("arithmetic") {
  auto R = make_ring("x,y");
  auto x = MPoly::variable(R, "x"), y = MPoly::variable(R, "y");
  auto p = (x + y).pow(5);
  CHECK(p.size() == 6);
  CHECK(exact_divide(p, x + y) == (x + y).pow(4));
  CHECK_THROWS_AS(exact_divide(p, x - y), InexactDivision);
  CHECK(p.derivative("x") == FieldElem(5) * (x + y).pow(4));
  CHECK(p - p == MPoly(R));
  auto m = x * x + y;
  CHECK(remainder_monic(x.pow(4), m, 0) == y * y);
}

TEST_CASE("rational roots") {
  auto R = make_ring("x");
  auto rr = [&](const char* s) { return rational_roots(parse_poly(s, R)); };
  auto r = rr("x^2 - 1");
  REQUIRE(r.size() == 2);
  CHECK(r[0].value == -1);
  CHECK(r[1].value == 1);
  CHECK(rr("x^2 - 2").empty());
  r = rr("(x+9)^2*(x^2+1)");
  REQUIRE(r.size() == 1);
  CHECK(r[0].value == -9);
  CHECK(r[0].multiplicity == 2);
  r = rr("x^3*(6*x - 5)^3*(7*x+123456789)*(x^4 + 3)");
  REQUIRE(r.size() == 3);
  CHECK(r[0].value == Rational(-123456789, 7));
  CHECK(r[1].value == 0);
  CHECK(r[1].multiplicity == 3);
  CHECK(r[2].value == Rational(5, 6));
}

TEST_CASE("resultant and determinants") {
  auto R = make_ring("x,a,b");
  auto P = [&](const char* s) { return parse_poly(s, R); };
  CHECK(resultant(P("x^2 - a"), P("x - b"), 0) == P("b^2 - a"));
  CHECK(resultant(P("x - 1"), P("x + 1"), 0) == P("2"));
  PolyMatrix m(R, 2, 2);
  m(0, 0) = P("x");
  m(0, 1) = P("a");
  m(1, 0) = P("a");
  m(1, 1) = P("x");
  CHECK(bareiss_det(m) == P("x^2 - a^2"));
  CHECK(minor_expansion_det(m) == P("x^2 - a^2"));
  CHECK(bareiss_det(PolyMatrix::identity(R, 7)) == P("1"));
  PolyMatrix s(R, 2, 2);
  s(0, 0) = P("1");
  s(0, 1) = P("x");
  s(1, 1) = P("1");
  auto sol = solve_linear(s, {P("a"), P("b")});
  CHECK(sol.denominator == P("1"));
  CHECK(sol.numerators[0] == P("a - x*b"));
  CHECK(sol.numerators[1] == P("b"));
}
