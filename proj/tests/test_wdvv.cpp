#include "doctest.h"
#include "e7/discrim.hpp"
#include "e7/parse.hpp"
#include "e7/wdvv.hpp"

#include <random>

using namespace e7;

namespace {

const PotentialE7& pot() { return potential(); }

MPoly X(const char* s) { return parse_poly(s, pot().ctx->ring); }

AlgElem A(const char* p, const char* q = "0", unsigned k = 0) { return AlgElem(pot().ctx, X(p), X(q), k); }

AlgElem random_elem(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2), k(0, 2);
  MPoly p(pot().ctx->ring), q(pot().ctx->ring);
  for (int t = 0; t < 4; ++t) {
    MPoly mp(pot().ctx->ring, FieldElem(c(rng))), mq(pot().ctx->ring, FieldElem(c(rng)));
    for (std::size_t j = 0; j < 7; ++j) {
      mp = mp * MPoly::variable(pot().ctx->ring, j).pow(e(rng) / 2);
      mq = mq * MPoly::variable(pot().ctx->ring, j).pow(e(rng) / 2);
    }
    p += mp;
    q += mq;
  }
  return AlgElem(pot().ctx, p, q, static_cast<unsigned>(k(rng)));
}

const FrobMatrices& mats() {
  static const FrobMatrices m = frob_matrices(pot());
  return m;
}

}  // namespace

TEST_CASE("AlgElem arithmetic") {
  const auto& ctx = pot().ctx;
  AlgElem z = AlgElem::z(ctx);
  AlgElem w(ctx, ctx->w);
  CHECK(z * z == w);
  CHECK(z.partial(5) == AlgElem(ctx, MPoly(ctx->ring), X("1/2"), 1));
  for (std::size_t j = 0; j < 5; ++j) CHECK(w.partial(j) == AlgElem(ctx, -ctx->v.derivative(j)));
  CHECK(w.partial(6).is_zero());
  CHECK((AlgElem(ctx, ctx->w * X("x1"), ctx->w, 1)) == A("x1", "1"));

  std::mt19937 rng(2);
  for (int it = 0; it < 30; ++it) {
    AlgElem a = random_elem(rng), b = random_elem(rng);
    std::size_t i = it % 7, j = (3 * it + 1) % 7;
    CHECK((a * b).partial(i) == a.partial(i) * b + a * b.partial(i));
    CHECK(a.partial(i).partial(j) == a.partial(j).partial(i));
  }
}

TEST_CASE("AlgElem numeric consistency") {
  // at points where w = r^2, z -> +-r must commute with the ring operations
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(-4, 4);
  const auto& ctx = pot().ctx;
  for (int it = 0; it < 10; ++it) {
    std::vector<FieldElem> x(7);
    for (auto& c : x) {
      Rational q(d(rng), 1 + (it % 3));
      q.canonicalize();
      c = FieldElem(q);
    }
    Rational r(d(rng) == 0 ? 1 : d(rng), 3);
    r.canonicalize();
    x[5] = FieldElem(0);
    x[5] = ctx->v.evaluate(x) + FieldElem(r * r);
    AlgElem a = random_elem(rng), b = random_elem(rng);
    if (ctx->w.evaluate(x).is_zero()) continue;
    for (FieldElem zr : {FieldElem(r), FieldElem(-r)}) {
      CHECK((a * b).evaluate(x, zr) == a.evaluate(x, zr) * b.evaluate(x, zr));
      CHECK((a + b).evaluate(x, zr) == a.evaluate(x, zr) + b.evaluate(x, zr));
    }
  }
}

TEST_CASE("potential") {
  const auto& f = pot();
  CHECK(f.F.euler() == f.F * FieldElem(Rational(15, 7)));
  CHECK(f.F_poly.coefficient(0, 15).constant_term() == FieldElem(Rational(3939238656, 1092455)));
  CHECK(f.F_alg == AlgElem::z(f.ctx) * AlgElem::z(f.ctx) * AlgElem::z(f.ctx) * AlgElem::z(f.ctx) * AlgElem::z(f.ctx) *
                       FieldElem(Rational(8, 105)));
  // F - F0 does not involve x7
  MPoly F0 = X("x7^2*x1/2 + x4^2*x7/2 + x3*x5*x7 + x2*x6*x7");
  CHECK_FALSE((f.F_poly - F0).depends_on(6));
  CHECK(f.ctx->v == X("-36*x1^6 - 36*x1^4*x2 + 12*x1^3*x3 - 231*x1^2*x2^2 - 6*x1^2*x4 - 84*x1*x2*x3 - x1*x5 - 49*x2^3 - "
                      "7*x2*x4 - 7*x3^2"));
}

TEST_CASE("Frobenius matrices") {
  const auto& m = mats();
  const auto& ctx = pot().ctx;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      CHECK(m.B[6][i][j] == AlgElem(ctx, MPoly(ctx->ring, FieldElem(i == j ? 1 : 0))));
      CHECK(m.C[i][j] == m.C[6 - j][6 - i]);
    }
  CHECK(alg_matmul(m.B[0], m.B[1]) == alg_matmul(m.B[1], m.B[0]));
  CHECK(alg_matmul(m.B[2], m.B[5]) == alg_matmul(m.B[5], m.B[2]));
}

TEST_CASE("toy potential: pairing part only") {
  const auto& ctx = pot().ctx;
  PotentialE7 toy;
  toy.ctx = ctx;
  toy.F_poly = X("x7^2*x1/2 + x4^2*x7/2 + x3*x5*x7 + x2*x6*x7");
  toy.F = AlgElem(ctx, toy.F_poly);
  auto m = frob_matrices(toy);
  CHECK(m.C[0][0] == A("x7"));
  CHECK(m.C[6][0] == A("x1"));
  CHECK(m.C[1][0] == A("x6"));
  CHECK(m.C[0][1].is_zero());
  CHECK(det_T(m) == parse_poly("x7^7", laurent_ring()));
  CHECK(check_commutators(m).empty());
}

TEST_CASE("field determinant") {
  const ExtField& F = ExtField::septic();
  FieldElem c = FieldElem::generator(F);
  std::vector<std::vector<FieldElem>> m{{c, FieldElem(1)}, {FieldElem(2), c * c}};
  CHECK(field_det(m) == c * c * c - FieldElem(2));
  CHECK(c.pow(7) == FieldElem(Rational(1, 14112)));
}

TEST_CASE("kappa at random points") {
  auto k = pointwise_kappa(mats(), discriminant().delta_tilde, 3, 11);
  REQUIRE(k.size() == 3);
  for (const auto& x : k) CHECK(x == FieldElem(1));
}
