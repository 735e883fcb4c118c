#include "doctest.h"
#include "e7/discrim.hpp"
#include "e7/e7family.hpp"
#include "e7/parse.hpp"
#include "e7/singclass.hpp"
#include "e7/univariate.hpp"

#include <random>

using namespace e7;

namespace {

const AnsatzState& ansatz() {
  static const AnsatzState s = make_ansatz();
  return s;
}

const Elimination& elimination() {
  static const Elimination e = eliminate_c_then_b(ansatz(), build_H(ansatz()));
  return e;
}

std::vector<std::pair<std::string, FieldElem>> zeros(std::initializer_list<const char*> names) {
  std::vector<std::pair<std::string, FieldElem>> v;
  for (const char* n : names) v.emplace_back(n, FieldElem(0));
  return v;
}

MPoly P(const char* s) { return parse_poly(s, param_ring()); }

}  // namespace

TEST_CASE("ansatz and H") {
  const auto& s = ansatz();
  const RingPtr& r = s.ring;
  std::size_t ix = r->index("x"), iy = r->index("y");
  CHECK(s.M0.degree(ix) == 4);
  CHECK(s.M1.degree(ix) == 1);
  CHECK(s.N0.degree(ix) == 2);
  CHECK(s.N0.coefficient(ix, 0).is_zero());
  CHECK(s.N1.degree(ix) == 3);
  CHECK(s.N2.degree(ix) == 2);
  CHECK(s.P0.degree(ix) == 5);
  CHECK(s.P1.degree(ix) == 4);
  CHECK(s.P2.degree(ix) == 1);
  CHECK(s.f == f_tilde(FamilyParams{{MPoly::variable(r, "s3"), MPoly::variable(r, "t1"), MPoly::variable(r, "t2"),
                                     MPoly::variable(r, "t3"), MPoly::variable(r, "t4"), MPoly::variable(r, "t5"),
                                     MPoly::variable(r, "t7")}},
                       r));

  MPoly H = build_H(s);
  CHECK_FALSE(H.depends_on(r->index("z")));
  CHECK(H.coefficient(iy, 4) == MPoly(r, FieldElem(3)) * s.P2 + s.M1);
  std::vector<std::pair<std::size_t, FieldElem>> abc;
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    char c = r->var(i)[0];
    if (c == 'a' || c == 'b' || c == 'c') abc.emplace_back(i, FieldElem(0));
  }
  CHECK(H.specialize(abc).is_zero());
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    char c = r->var(i)[0];
    if (c == 'a' || c == 'b' || c == 'c') CHECK(H.degree(i) == 1);
  }
}

TEST_CASE("elimination") {
  const auto& s = ansatz();
  const auto& e = elimination();
  const RingPtr& r = s.ring;
  std::size_t ix = r->index("x");
  CHECK(e.b_det == MPoly(r, FieldElem(-9)));
  CHECK(e.L0.degree(ix) <= 4);
  CHECK(e.L1.degree(ix) <= 2);
  CHECK(e.L0.coefficient(ix, 0).is_zero());
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    char c = r->var(i)[0];
    if (c == 'b' || c == 'c') {
      CHECK_FALSE(e.L0.depends_on(i));
      CHECK_FALSE(e.L1.depends_on(i));
    }
  }
  // only t7 survives
  auto only_t7 = zeros({"s3", "t1", "t2", "t3", "t4", "t5"});
  MPoly L = e.L0.specialize(only_t7) + e.L1.specialize(only_t7) * MPoly::variable(r, "y");
  MPoly expect = parse_poly("7/9*t7*(a1*x + a2*x^2 + a3*x^3 + a4*x^4 + y*(a5*t7 + a6*x + a7*x^2))", r);
  CHECK(L == expect);
}

TEST_CASE("matrix A specializes to B") {
  PolyMatrix A = matrix_A(ansatz(), elimination());
  CHECK(audit_row_weights(A));
  PolyMatrix B = matrix_B_fixture();
  auto z = zeros({"t1", "t2", "t3", "t4"});
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK_MESSAGE(A(i, j).specialize(z) == B(i, j), "entry " << i + 1 << "," << j + 1);
  CHECK(B(0, 0) == P("7/9*t7"));
  CHECK(B(4, 6) == P("7/9*5*(2*t5^2 - 3*s3*t7)/7"));
  CHECK(B(3, 3) == P("7/9*t7"));
  CHECK(matrix_B_printed_44() != B(3, 3));
  // the two determinant routines agree on B
  CHECK(minor_expansion_det(B) == bareiss_det(B));
}

TEST_CASE("discriminant") {
  const auto& d = discriminant();
  RingPtr pr = param_ring();
  std::size_t it7 = pr->index("t7");
  MPoly t7 = MPoly::variable(pr, it7);
  auto w = param_weights();

  CHECK(d.det_A == d.delta_tilde * t7 * FieldElem(d.k0));
  CHECK(d.k0 == Rational(823543, 4782969));
  CHECK(d.delta_tilde.degree(it7) == 7);
  CHECK(d.delta_tilde.coefficient(it7, 7) == P("1"));
  CHECK(weighted_degree(d.delta_tilde, w) == Rational(49));
  CHECK(d.delta_st34.degree(it7) == 6);
  CHECK(d.delta_st34.coefficient(it7, 6) == P("1"));
  CHECK(weighted_degree(d.delta_st34, w) == Rational(42));
  CHECK_FALSE(d.delta_st34.depends_on(pr->index("s3")));
  CHECK_FALSE(d.delta_tilde.coefficient(it7, 0).is_zero());

  MPoly st0 = d.delta_st34.coefficient(it7, 0);
  CHECK(try_divide(st0, P("t4^3")).has_value());

  // det(B) / ((7/9)^7 t7) against the displayed expansion
  MPoly d0 = delta_tilde_0(d.delta_tilde);
  auto shown = det_B_display();
  for (int k = 0; k < 4; ++k) CHECK(d0.coefficient(it7, 7 - k) == shown[k]);
  CHECK(minor_expansion_det(matrix_B_fixture()) == d0 * t7 * FieldElem(d.k0));

  CHECK(audit_det(d, 20, 7));
}

TEST_CASE("discriminant squarefree at random points") {
  MPoly d0 = delta_tilde_0(discriminant().delta_tilde);
  RingPtr pr = param_ring();
  std::size_t it7 = pr->index("t7");
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-15, 15), den(1, 6);
  for (int k = 0; k < 3; ++k) {
    Rational s3(num(rng), den(rng)), t5(num(rng), den(rng));
    s3.canonicalize();
    t5.canonicalize();
    MPoly u = d0.specialize({{pr->index("s3"), FieldElem(s3)}, {pr->index("t5"), FieldElem(t5)}});
    UPoly g = upoly_gcd(to_upoly(u, it7), to_upoly(u.derivative(it7), it7));
    CHECK(g.size() == 1);
  }
}

TEST_CASE("uv points") {
  MPoly d0 = delta_tilde_0(discriminant().delta_tilde);
  auto rem = uv_remainders(d0);
  for (const auto& r : rem) CHECK(r.is_zero());

  std::mt19937 rng(5);
  RingPtr xyz = make_ring("x,y,z");
  for (int k = 0; k < 3; ++k) {
    UvPoint p = random_uv_point(rng, d0);
    auto uv = uv_formula(p.s3, p.t5, p.t7);
    REQUIRE(uv.has_value());
    CHECK(uv->first == p.u);
    CHECK(uv->second == p.v);
    std::string f = "x^3*y + y^3 + (" + to_string(p.t7) + ")*x + (" + to_string(p.t5) + ")*x^2 + (" + to_string(p.s3) +
                    ")*y^2 - z^2";
    auto rep = classify_surface(parse_poly(f, xyz));
    bool found = false;
    for (const auto& g : rep.germs)
      if (g.point[0] == FieldElem(p.u) && g.point[1] == FieldElem(p.v) && g.point[2].is_zero()) found = true;
    CHECK(found);
  }
}

TEST_CASE("delta_ST34 on the tau table") {
  const auto& d = discriminant();
  for (int i = 1; i <= 6; ++i) {
    RingPtr r = eta_ring(st34_field(i));
    auto tau = st34_tau(i, MPoly(r, FieldElem(1)));
    auto vals = values_of(tau.v);
    if (i == 2 || i == 3 || i == 6)
      CHECK(vals[6].is_zero());
    else
      CHECK_MESSAGE(d.delta_st34.evaluate(vals).is_zero(), "tau[" << i << "]");
  }
}

TEST_CASE("oracle values of delta~") {
  const auto& d = discriminant();
  auto at = [&](std::initializer_list<const char*> xs) {
    std::vector<FieldElem> v;
    for (const char* x : xs) v.push_back(FieldElem(parse_rational(x)));
    return d.delta_tilde.evaluate(v);
  };
  CHECK(at({"-2/3", "3", "0", "2/3", "4", "4", "1"}) == FieldElem(parse_rational("-184031744613107278/5403265623")));
  CHECK(at({"3", "-2/3", "2/3", "3/2", "1/3", "-3", "5"}) ==
        FieldElem(parse_rational("10632156399303366964565/4537705696320384")));
}
