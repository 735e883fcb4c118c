#include "doctest.h"
#include "e7/e7family.hpp"
#include "e7/parse.hpp"

#include <random>
#include <set>

using namespace e7;

namespace {

Vec8 vec(std::initializer_list<Rational> xs) {
  Vec8 v;
  std::size_t i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

MPoly X(const char* s) {
  static RingPtr r = make_ring("X");
  return parse_poly(s, r);
}

// random element of the span of the fundamental weights
Vec8 random_v(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec8 v;
  v.fill(0);
  for (const auto& w : e7_roots().fundamental_weights) v = v + Rational(d(rng)) * w;
  return v;
}

}  // namespace

TEST_CASE("E7 roots and weights") {
  const auto& rs = e7_roots();
  CHECK(rs.roots.size() == 126);
  std::set<std::vector<Rational>> set;
  Vec8 n = vec({0, 0, 0, 0, 0, 0, 1, 1});
  for (const auto& r : rs.roots) {
    CHECK(dot(r, r) == 2);
    CHECK(dot(r, n) == 0);
    set.insert(std::vector<Rational>(r.begin(), r.end()));
  }
  CHECK(set.size() == 126);
  for (const auto& a : rs.simple_roots) CHECK(set.count(std::vector<Rational>(a.begin(), a.end())) == 1);
  bool closed = true;
  for (const auto& r : rs.roots)
    for (const auto& a : rs.simple_roots) {
      auto s = reflect(r, a);
      closed = closed && set.count(std::vector<Rational>(s.begin(), s.end()));
    }
  CHECK(closed);
  for (int j = 0; j < 7; ++j)
    for (int k = 0; k < 7; ++k) CHECK(dot(rs.simple_roots[k], rs.fundamental_weights[j]) == (j == k ? 1 : 0));
  CHECK(Rational(2) * rs.fundamental_weights[1] == vec({1, 1, 1, 1, 1, 1, -2, 2}));
  CHECK(rs.fundamental_weights[6] == vec({0, 0, 0, 0, 0, 1, Rational(-1, 2), Rational(1, 2)}));

  const auto& w = weights56();
  CHECK(w.size() == 56);
  std::set<std::vector<Rational>> ws;
  for (const auto& l : w) {
    ws.insert(std::vector<Rational>(l.begin(), l.end()));
    CHECK(dot(l, l) == Rational(3, 2));
  }
  CHECK(ws.size() == 56);
  for (const auto& l : w) {
    Vec8 m = Rational(-1) * l;
    CHECK(ws.count(std::vector<Rational>(m.begin(), m.end())) == 1);
  }
}

TEST_CASE("Psi") {
  const auto& fw = e7_roots().fundamental_weights;
  Vec8 zero;
  zero.fill(0);
  CHECK(psi_poly(zero) == X("X^56"));
  CHECK(psi_poly(Rational(2) * fw[0]) == X("X^32*(X - 2)^12*(X + 2)^12"));
  CHECK(psi_poly(Rational(2) * fw[6]) == X("(X^2 - 9)*(X^2 - 1)^27"));
  CHECK(epsilons(Rational(2) * fw[6])[0] == 36);
  for (auto e : epsilons(zero)) CHECK(e == 0);

  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, 125);
  for (int it = 0; it < 20; ++it) {
    Vec8 v = random_v(rng);
    CHECK(psi_poly(reflect(v, e7_roots().roots[pick(rng)])) == psi_poly(v));
  }
  // no degree-4 basic invariant: eps_2 is a fixed multiple of eps_1^2
  std::optional<Rational> ratio;
  for (int it = 0; it < 5; ++it) {
    auto e = epsilons(random_v(rng));
    if (sgn(e[0]) == 0) continue;
    Rational r = e[1] / (e[0] * e[0]);
    if (!ratio) ratio = r;
    CHECK(r == *ratio);
  }
}

TEST_CASE("case vectors and Psi products") {
  const auto& fw = e7_roots().fundamental_weights;
  const int k[7] = {2, 4, 4, 2, 2, 2, 2};
  for (int i = 1; i <= 7; ++i) {
    Vec8 v = case_weight_vector(i);
    Vec8 kw = Rational(k[i - 1]) * fw[i - 1];
    CHECK((v == kw || v == Rational(-1) * kw));
  }
  CHECK(psi_poly(case_weight_vector(2)) == X("(X^2 - 36)^7*(X^2 - 4)^21"));
  CHECK(psi_poly(case_weight_vector(3)) == X("X^20*(X^2 - 64)^6*(X^2 - 16)^12"));
  CHECK(psi_poly(case_weight_vector(4)) == X("X^12*(X^2 - 36)^4*(X^2 - 16)^6*(X^2 - 4)^12"));
  CHECK(psi_poly(case_weight_vector(5)) == X("(X^2 - 25)^3*(X^2 - 9)^10*(X^2 - 1)^15"));
  CHECK(psi_poly(case_weight_vector(6)) == X("X^20*(X^2 - 16)^2*(X^2 - 4)^16"));
}

TEST_CASE("pq from eps") {
  const auto& fw = e7_roots().fundamental_weights;
  std::vector<Rational> z(9, Rational(0));
  for (const auto& p : pq_from_eps(z).v) CHECK(p.is_zero());
  for (Rational xi : {Rational(1), Rational(3, 2), Rational(-2, 5)}) {
    auto l = pq_from_eps(epsilons(2 * xi * fw[6]));
    auto target = lambda_case(7, xi * xi);
    for (int k = 0; k < 7; ++k) CHECK(values_of(l.v)[k] == FieldElem(target[k]));
  }
  for (int i = 1; i <= 7; ++i) {
    FieldElem one(1);
    Rational eta = eta_of_xi(i).evaluate(std::span<const FieldElem>(&one, 1)).rational();
    auto l = pq_from_eps(epsilons(case_weight_vector(i)));
    auto target = lambda_case(i, eta);
    for (int k = 0; k < 7; ++k) CHECK(values_of(l.v)[k] == FieldElem(target[k]));
  }
}

TEST_CASE("lambda tables") {
  auto l5 = lambda_case(5, Rational(1));
  std::array<Rational, 7> want{Rational(-100, 3), -20, Rational(3400, 27), Rational(520, 3), 92, Rational(70, 3),
                               Rational(5, 2)};
  CHECK(l5 == want);
  for (int i = 1; i <= 7; ++i)
    for (auto v : lambda_case(i, Rational(0))) CHECK(v == 0);
  RingPtr r = eta_ring();
  MPoly eta = MPoly::variable(r, 0);
  auto l7 = lambda_case(7, eta);
  for (int k = 0; k < 6; ++k) CHECK(l7.v[k].is_zero());
  CHECK(l7.v[6] == eta);
}

TEST_CASE("parameter maps") {
  RingPtr r = eta_ring();
  MPoly eta = MPoly::variable(r, 0);
  std::size_t rows = 0;
  for (int i = 1; i <= 7; ++i) {
    for (const auto& row : solution_table(i, eta)) {
      CHECK(st_to_pq(row) == lambda_case(i, eta));
      ++rows;
    }
  }
  CHECK(rows == 16);

  std::array<FieldElem, 7> zeros;
  for (auto& p : st_to_pq(constant_family(zeros, r)).v) CHECK(p.is_zero());

  auto contains = [](const PqToSt& s, const std::array<Rational, 7>& row) {
    for (const auto& sol : s.solutions)
      if (sol == row) return true;
    return false;
  };
  auto s0 = pq_to_st(std::array<Rational, 7>{});
  CHECK(contains(s0, std::array<Rational, 7>{}));
  auto s2 = pq_to_st(lambda_case(2, Rational(1)));
  CHECK(contains(s2, {2, Rational(7, 6), Rational(-10, 3), Rational(-52, 27), Rational(8, 3), Rational(8, 9), 0}));
  CHECK(!contains(s2, {2, Rational(7, 6), Rational(-10, 3), Rational(52, 27), Rational(8, 3), Rational(8, 9), 0}));
  for (int i = 1; i <= 7; ++i) {
    auto s = pq_to_st(lambda_case(i, Rational(1)));
    for (const auto& row : solution_table(i, MPoly(r, FieldElem(1)))) {
      auto v = values_of(row.v);
      std::array<Rational, 7> q;
      for (int k = 0; k < 7; ++k) q[k] = v[k].rational();
      CHECK(contains(s, q));
    }
  }
  auto s3 = pq_to_st(lambda_case(3, Rational(1)));
  CHECK(s3.solutions.size() >= 3);

  // weights of (p0, p1, q0..q4) under wt(s3) = 3, wt(tj) = j
  RingPtr st = make_ring("s3,t1,t2,t3,t4,t5,t7");
  FamilyParams sym;
  for (int k = 0; k < 7; ++k) sym.v[k] = MPoly::variable(st, k);
  std::vector<Rational> w{3, 1, 2, 3, 4, 5, 7};
  auto pq = st_to_pq(sym);
  const int want[7] = {6, 4, 9, 7, 5, 3, 1};
  for (int k = 0; k < 7; ++k) CHECK(weighted_degree(pq.v[k], w) == Rational(want[k]));

  // f~(x - t2/3, y - s3/3, z) = f_E7 under the map
  RingPtr big = xyz_ring(st);
  MPoly ft = f_tilde(sym, big);
  MPoly x = MPoly::variable(big, "x"), y = MPoly::variable(big, "y");
  MPoly shifted = substitute(ft,
                             {{"x", x - MPoly::variable(big, "t2") * FieldElem(Rational(1, 3))},
                              {"y", y - MPoly::variable(big, "s3") * FieldElem(Rational(1, 3))}},
                             big);
  CHECK(shifted == f_e7(pq, big));
  std::vector<Rational> wx{2, 3, Rational(9, 2), 3, 1, 2, 3, 4, 5, 7};
  CHECK(weighted_degree(ft, wx) == Rational(9));
}

TEST_CASE("Shioda Phi, case 7") {
  auto phi = shioda_phi(lambda_case(7, Rational(1)));
  CHECK(phi == X("(X^2 - 9)*(X^2 - 1)^27"));
  auto l = lambda_case(7, Rational(1));
  CHECK(phi.coefficient(0, 54) == X("1") * FieldElem(-36 * l[6]));
}

TEST_CASE("Shioda Phi equals Psi") {
  for (int i = 1; i <= 7; ++i) {
    FieldElem one(1);
    Rational eta = eta_of_xi(i).evaluate(std::span<const FieldElem>(&one, 1)).rational();
    CHECK(shioda_phi(lambda_case(i, eta)) == psi_poly(case_weight_vector(i)));
  }
  std::mt19937 rng(11);
  for (int it = 0; it < 3; ++it) {
    Vec8 v = random_v(rng);
    auto l = values_of(pq_from_eps(epsilons(v)).v);
    std::array<Rational, 7> lam;
    for (int k = 0; k < 7; ++k) lam[k] = l[k].rational();
    auto phi = shioda_phi(lam);
    CHECK(phi == psi_poly(v));
    CHECK(phi.coefficient(0, 54) == X("1") * FieldElem(-36 * lam[6]));
  }
}

TEST_CASE("ST34 tables") {
  RingPtr r = eta_ring();
  MPoly eta = MPoly::variable(r, 0);
  auto t3 = st34_tau(3, eta);
  CHECK(t3.v[1] == eta);
  for (int k : {0, 2, 3, 4, 5, 6}) CHECK(t3.v[k].is_zero());
  auto t5 = st34_tau(5, eta);
  CHECK(t5.v[6] == parse_poly("161243136000*eta^7", r));
  RingPtr rw = eta_ring(ExtField::eisenstein());
  auto t4 = st34_tau(4, MPoly::variable(rw, 0));
  CHECK(t4.v[1] == parse_poly("-(4 + 5*w)*eta", rw));
  CHECK(t4.v[6] == parse_poly("-6561*w*eta^7", rw));

  for (int i = 1; i <= 6; ++i) {
    RingPtr m = make_ring("m", st34_field(i));
    CHECK(power_sums(st34_x(i, m)) == st34_sums(i, m));
  }
  RingPtr m = make_ring("m");
  auto s2 = power_sums(st34_x(2, m));
  CHECK(s2[0] == parse_poly("-6*m^3", m));
  CHECK(s2[4] == parse_poly("-32766*m^15", m));
  CHECK(s2[5].is_zero());
  std::array<MPoly, 6> zx;
  for (auto& p : zx) p = MPoly(m);
  for (const auto& p : power_sums(zx)) CHECK(p.is_zero());
}

TEST_CASE("ST34 t from m") {
  RingPtr r = make_ring("m1,m2,m3,m4,m5,m7");
  std::array<MPoly, 6> m;
  for (int k = 0; k < 6; ++k) m[k] = MPoly::variable(r, k);
  auto t = st34_t_from_m(m);
  std::vector<Rational> w{6, 12, 18, 24, 30, 42};
  const int deg[6] = {1, 2, 3, 4, 5, 7};
  for (int k = 0; k < 6; ++k) CHECK(weighted_degree(t[k], w) == Rational(6 * deg[k]));
  CHECK(t[0] == parse_poly("-m1/3", r));
  std::vector<FieldElem> pt{1, 0, 0, 0, 0, 0};
  CHECK(t[1].evaluate(pt) == FieldElem(Rational(-87, 125)));
  std::array<MPoly, 6> z;
  for (auto& p : z) p = MPoly(r);
  for (const auto& p : st34_t_from_m(z)) CHECK(p.is_zero());
}
