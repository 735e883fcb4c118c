#include "doctest.h"
#include "e7/groebner.hpp"
#include "e7/parse.hpp"

#include <random>

using namespace e7;

TEST_CASE("buchberger basics") {
  auto R = make_ring("x,y");
  auto P = [&](const char* s) { return parse_poly(s, R); };
  auto ord = MonomialOrder::grevlex(2);
  auto gb = buchberger({P("x"), P("y")}, ord);
  CHECK(gb.generators().size() == 2);
  CHECK(*quotient_dimension(gb) == 1);
  gb = buchberger({P("x^2 - 1"), P("x - 1")}, ord);
  REQUIRE(gb.generators().size() == 1);
  CHECK(gb.generators()[0] == P("x - 1"));
  CHECK(*quotient_dimension(buchberger({P("x^2"), P("y^3")}, ord)) == 6);
  gb = buchberger({P("3*x^2*y"), P("x^3 + 3*y^2")}, ord);
  CHECK(*quotient_dimension(gb) == 7);
  CHECK(*quotient_dimension(buchberger({P("3*x^2*y"), P("x^3 + 3*y^2")}, MonomialOrder::lex(2))) == 7);
  auto again = buchberger(gb.generators(), ord);
  CHECK(again.generators() == gb.generators());
  for (std::size_t i = 0; i < gb.generators().size(); ++i)
    for (std::size_t j = i + 1; j < gb.generators().size(); ++j)
      CHECK(normal_form(s_polynomial(gb.generators()[i], gb.generators()[j], ord), gb).is_zero());
  CHECK(buchberger({P("x*y - 1"), P("x"), P("y")}, ord).is_unit());
  CHECK(!quotient_dimension(buchberger({P("x*y")}, ord)));
}

TEST_CASE("local multiplicity") {
  auto R = make_ring("x,y");
  auto P = [&](const char* s) { return parse_poly(s, R); };
  CHECK(*local_multiplicity_at_origin({P("x"), P("y")}) == 1);
  CHECK(*local_multiplicity_at_origin({P("3*x^2*y"), P("x^3 + 3*y^2")}) == 7);
  // A1 at origin plus another point
  auto g = P("x^2 + y^2 - x^3");
  std::vector<MPoly> jac{g.derivative(0), g.derivative(1)};
  CHECK(*local_multiplicity_at_origin(jac) == 1);
  CHECK(*quotient_dimension(buchberger(jac, MonomialOrder::grevlex(2))) == 2);
  CHECK(*local_multiplicity_at(jac, {FieldElem(Rational(2, 3)), FieldElem(0)}) == 1);
  CHECK(!local_multiplicity_at_origin({P("x*y"), P("x^2")}, 10));
}

TEST_CASE("quotient dimension does not depend on the order") {
  std::mt19937 rng(7);
  auto R = make_ring("x,y,z");
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<MPoly> gens;
    const char* v[3] = {"x", "y", "z"};
    for (int i = 0; i < 3; ++i) {
      std::string s = std::string(v[i]) + "^" + std::to_string(2 + trial % 2);
      s += " + (" + std::to_string(c(rng)) + ")*" + v[(i + 1) % 3] + "*" + v[(i + 2) % 3];
      s += " + (" + std::to_string(c(rng)) + ")*" + v[(i + 1) % 3];
      gens.push_back(parse_poly(s, R));
    }
    auto a = quotient_dimension(buchberger(gens, MonomialOrder::grevlex(3)));
    auto b = quotient_dimension(buchberger(gens, MonomialOrder::lex(3)));
    CHECK(a == b);
  }
}
