#include "e7/discrim.hpp"

#include "e7/e7family.hpp"
#include "e7/parse.hpp"
#include "e7/univariate.hpp"

namespace e7 {

RingPtr param_ring() {
  static RingPtr r = make_ring("s3,t1,t2,t3,t4,t5,t7");
  return r;
}

std::vector<Rational> param_weights() { return {3, 1, 2, 3, 4, 5, 7}; }

namespace {

std::string vname(char c, int i) { return std::string(1, c) + std::to_string(i); }

RingPtr ansatz_ring() {
  static RingPtr r = [] {
    std::vector<std::string> v{"x", "y", "z"};
    for (int i = 1; i <= 7; ++i) v.push_back(vname('a', i));
    for (int i = 1; i <= 9; ++i) v.push_back(vname('b', i));
    for (int i = 1; i <= 13; ++i) v.push_back(vname('c', i));
    for (const auto& p : param_ring()->vars()) v.push_back(p);
    return make_ring(v);
  }();
  return r;
}

// sum_k coef(first + k) x^k
MPoly poly_in_x(const RingPtr& r, char c, int first, int last, int shift = 0) {
  MPoly x = MPoly::variable(r, "x");
  MPoly out(r);
  for (int i = first; i <= last; ++i) out += MPoly::variable(r, vname(c, i)) * x.pow(static_cast<unsigned>(i - first + shift));
  return out;
}

MPoly constant(const RingPtr& r, const Rational& q) { return MPoly(r, FieldElem(q)); }

// Coefficient of a variable that occurs linearly.
MPoly linear_coeff(const MPoly& p, std::size_t var) {
  if (p.degree(var) > 1) throw ClaimViolation("expected linear dependence on " + p.ring()->var(var));
  return p.coefficient(var, 1);
}

const DataFile& bfile() { return data_file("matrix_b.txt"); }

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

const std::array<MPoly, 4>& uv_polys() {
  static const std::array<MPoly, 4> p = [] {
    const auto& df = data_file("uv.txt");
    std::array<MPoly, 4> out;
    const char* names[4] = {"M1", "N1", "M2", "N2"};
    for (int k = 0; k < 4; ++k) out[k] = parse_poly(df.get("uv", names[k]), param_ring());
    return out;
  }();
  return p;
}

// N1^dx N2^dy F(M1/N1, M2/N2) for F in (x, y) with coefficients in the parameters.
MPoly clear_at(const MPoly& F, const RingPtr& xy, unsigned dx, unsigned dy) {
  const auto& [M1, N1, M2, N2] = uv_polys();
  std::size_t ix = xy->index("x"), iy = xy->index("y");
  std::vector<MPoly> pm1{constant(param_ring(), 1)}, pn1 = pm1, pm2 = pm1, pn2 = pm1;
  for (unsigned k = 1; k <= dx; ++k) {
    pm1.push_back(pm1.back() * M1);
    pn1.push_back(pn1.back() * N1);
  }
  for (unsigned k = 1; k <= dy; ++k) {
    pm2.push_back(pm2.back() * M2);
    pn2.push_back(pn2.back() * N2);
  }
  MPoly out(param_ring());
  for (unsigned a = 0; a <= F.degree(ix); ++a) {
    MPoly ca = F.coefficient(ix, a);
    for (unsigned b = 0; b <= ca.degree(iy); ++b) {
      MPoly cab = ca.coefficient(iy, b);
      if (cab.is_zero()) continue;
      out += cab.to_ring(param_ring()) * pm1[a] * pn1[dx - a] * pm2[b] * pn2[dy - b];
    }
  }
  return out;
}

}  // namespace

AnsatzState make_ansatz() {
  AnsatzState s;
  RingPtr r = ansatz_ring();
  s.ring = r;
  auto V = [&](const char* n) { return MPoly::variable(r, n); };
  MPoly x = V("x"), y = V("y"), z = V("z");
  s.A0 = V("t7") * x + V("t5") * x.pow(2) + V("t3") * x.pow(3) + V("t1") * x.pow(4);
  s.A1 = x.pow(3) + V("t2") * x.pow(2) + V("t4") * x;
  s.A2 = V("s3");
  s.M0 = poly_in_x(r, 'a', 1, 5);
  s.M1 = poly_in_x(r, 'a', 6, 7);
  s.N0 = poly_in_x(r, 'b', 1, 2, 1);
  s.N1 = poly_in_x(r, 'b', 3, 6);
  s.N2 = poly_in_x(r, 'b', 7, 9);
  s.P0 = poly_in_x(r, 'c', 1, 6);
  s.P1 = poly_in_x(r, 'c', 7, 11);
  s.P2 = poly_in_x(r, 'c', 12, 13);
  s.g1 = s.M0 + s.M1 * y;
  s.g2 = s.N0 + s.N1 * y + s.N2 * y * y;
  s.g3 = s.P0 + s.P1 * y + s.P2 * y * y;
  s.f = s.A0 + s.A1 * y + s.A2 * y * y + y.pow(3) - z * z;
  return s;
}

MPoly build_H(const AnsatzState& s) {
  const RingPtr& r = s.ring;
  MPoly z = MPoly::variable(r, "z");
  MPoly g = s.f + z * z;
  MPoly h1 = s.g1 * s.f + s.g2 * s.f.derivative("x") + s.g3 * s.f.derivative("y") -
             constant(r, Rational(1, 2)) * z * s.g1 * s.f.derivative("z");
  MPoly h2 = s.g1 * g + s.g2 * g.derivative("x") + s.g3 * g.derivative("y");
  if (h1.depends_on(r->index("z"))) throw ClaimViolation("H depends on z");
  if (h1 != h2) throw ClaimViolation("the two forms of H disagree");
  return h2;
}

Elimination eliminate_c_then_b(const AnsatzState& s, const MPoly& H0) {
  const RingPtr& r = s.ring;
  const std::size_t ix = r->index("x"), iy = r->index("y");
  Elimination e;
  e.c_solution.assign(13, MPoly(r));
  MPoly H = H0;
  // H_4, H_3, H_2 fix P_2, P_1, P_0 (c12-13, c7-11, c1-6) by x-coefficients.
  struct Group {
    unsigned ypow;
    int first, last;
  };
  for (Group g : {Group{4, 12, 13}, Group{3, 7, 11}, Group{2, 1, 6}}) {
    MPoly Hk = H.coefficient(iy, g.ypow);
    std::vector<std::optional<MPoly>> images(r->nvars());
    for (int j = g.first; j <= g.last; ++j) {
      std::size_t cj = r->index(vname('c', j));
      MPoly coef = Hk.coefficient(ix, static_cast<unsigned>(j - g.first));
      MPoly lead = linear_coeff(coef, cj);
      if (lead != constant(r, 3)) throw ClaimViolation("c-system is not triangular with pivot 3");
      MPoly rest = coef - lead * MPoly::variable(r, cj);
      if (rest.depends_on(cj)) throw ClaimViolation("c-system not linear");
      MPoly sol = rest * FieldElem(Rational(-1, 3));
      images[cj] = sol;
      e.c_solution[j - 1] = sol;
    }
    H = substitute(H, images, r);
    if (!H.coefficient(iy, g.ypow).is_zero()) throw ClaimViolation("H_" + std::to_string(g.ypow) + " does not vanish");
  }
  for (auto& c : e.c_solution) {
    // later groups may still refer to earlier-solved c's; none do, but keep it exact
    for (int j = 1; j <= 13; ++j)
      if (c.depends_on(r->index(vname('c', j)))) throw ClaimViolation("c solution refers to c" + std::to_string(j));
  }
  if (H.degree(iy) > 1) throw ClaimViolation("H has y-degree above one after c-elimination");
  e.K0 = H.coefficient(iy, 0);
  e.K1 = H.coefficient(iy, 1);
  if (e.K0.degree(ix) > 8 || e.K1.degree(ix) > 7) throw ClaimViolation("K0/K1 degrees exceed 8/7");

  std::vector<MPoly> eqs;
  for (unsigned m = 5; m <= 8; ++m) eqs.push_back(e.K0.coefficient(ix, m));
  for (unsigned m = 3; m <= 7; ++m) eqs.push_back(e.K1.coefficient(ix, m));
  std::vector<std::size_t> bidx;
  for (int j = 1; j <= 9; ++j) bidx.push_back(r->index(vname('b', j)));
  std::vector<std::pair<std::size_t, FieldElem>> bzero;
  for (auto b : bidx) bzero.emplace_back(b, FieldElem(0));

  PolyMatrix Mb(r, 9, 9);
  std::vector<MPoly> rhs;
  for (std::size_t i = 0; i < 9; ++i) {
    MPoly base = eqs[i].specialize(bzero);
    MPoly check = base;
    for (std::size_t j = 0; j < 9; ++j) {
      Mb(i, j) = linear_coeff(eqs[i], bidx[j]);
      for (auto b : bidx)
        if (Mb(i, j).depends_on(b)) throw ClaimViolation("b-system not linear");
      check += Mb(i, j) * MPoly::variable(r, bidx[j]);
    }
    if (check != eqs[i]) throw ClaimViolation("b-system not linear");
    rhs.push_back(-base);
  }
  auto sol = solve_linear(Mb, rhs);
  e.b_det = sol.denominator;

  auto eliminate = [&](const MPoly& K) {
    MPoly num = K.specialize(bzero) * e.b_det;
    for (std::size_t j = 0; j < 9; ++j) num += linear_coeff(K, bidx[j]) * sol.numerators[j];
    auto q = try_divide(num, e.b_det);
    if (!q) throw ClaimViolation("coefficients of L0/L1 are not polynomial in (s3, tau)");
    return *q;
  };
  e.L0 = eliminate(e.K0);
  e.L1 = eliminate(e.K1);
  if (e.L0.degree(ix) > 4 || e.L1.degree(ix) > 2) throw ClaimViolation("L0/L1 degrees exceed 4/2");
  if (!e.L0.coefficient(ix, 0).is_zero()) throw ClaimViolation("H(0,0) != 0");
  return e;
}

PolyMatrix matrix_A(const AnsatzState& s, const Elimination& e) {
  const RingPtr& r = s.ring;
  const std::size_t ix = r->index("x");
  PolyMatrix A(param_ring(), 7, 7);
  MPoly rest0 = e.L0, rest1 = e.L1;
  MPoly x = MPoly::variable(r, ix), y = MPoly::variable(r, "y");
  for (int i = 1; i <= 7; ++i) {
    std::size_t ai = r->index(vname('a', i));
    MPoly ai_v = MPoly::variable(r, ai);
    MPoly l0 = linear_coeff(e.L0, ai), l1 = linear_coeff(e.L1, ai);
    for (unsigned j = 1; j <= 4; ++j) {
      MPoly c = l0.coefficient(ix, j);
      A(i - 1, j - 1) = c.to_ring(param_ring());
      rest0 -= ai_v * c * x.pow(j);
    }
    for (unsigned k = 1; k <= 3; ++k) {
      MPoly c = l1.coefficient(ix, k - 1);
      A(i - 1, k + 3) = c.to_ring(param_ring());
      rest1 -= ai_v * c * x.pow(k - 1);
    }
  }
  if (!rest0.is_zero() || !rest1.is_zero()) throw ClaimViolation("L0 + L1 y has terms outside the matrix shape");
  return A;
}

PolyMatrix matrix_B_fixture() {
  const auto& df = bfile();
  FieldElem factor = parse_rational(df.get("matrix_b", "factor"));
  PolyMatrix B(param_ring(), 7, 7);
  for (int i = 0; i < 7; ++i) {
    auto cells = split_commas(df.get("matrix_b", "row" + std::to_string(i + 1)));
    if (cells.size() != 7) throw AlgebraError("matrix_b row needs 7 entries");
    for (int j = 0; j < 7; ++j) B(i, j) = parse_poly(cells[j], param_ring()) * factor;
  }
  return B;
}

MPoly matrix_B_printed_44() {
  const auto& df = bfile();
  return parse_poly(df.get("matrix_b", "printed_44"), param_ring()) * FieldElem(parse_rational(df.get("matrix_b", "factor")));
}

std::array<MPoly, 4> det_B_display() {
  const auto& df = bfile();
  std::array<MPoly, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = parse_poly(df.get("det_b", "coef" + std::to_string(7 - k)), param_ring());
  return out;
}

DiscriminantBundle finish_discriminant(PolyMatrix A) {
  RingPtr pr = param_ring();
  const std::size_t it7 = pr->index("t7");
  DiscriminantBundle b{std::move(A), MPoly(pr), Rational(0), MPoly(pr), MPoly(pr)};
  b.det_A = minor_expansion_det(b.A);
  if (b.det_A.degree(it7) != 8) throw ClaimViolation("det A has t7-degree " + std::to_string(b.det_A.degree(it7)));
  MPoly top = b.det_A.coefficient(it7, 8);
  if (!top.is_constant() || top.is_zero()) throw ClaimViolation("leading t7 coefficient of det A is not a constant");
  b.k0 = top.constant_term().rational();
  MPoly t7 = MPoly::variable(pr, it7);
  auto q = try_divide(b.det_A, t7);
  if (!q) throw ClaimViolation("det A is not divisible by t7");
  b.delta_tilde = *q * FieldElem(1 / b.k0);
  MPoly at0 = b.delta_tilde.specialize({{pr->index("s3"), FieldElem(0)}});
  auto d = try_divide(at0, t7);
  if (!d) throw ClaimViolation("delta~(0, tau) is not divisible by t7");
  b.delta_st34 = *d;
  return b;
}

const DiscriminantBundle& discriminant() {
  static const DiscriminantBundle b = [] {
    auto s = make_ansatz();
    auto H = build_H(s);
    auto e = eliminate_c_then_b(s, H);
    return finish_discriminant(matrix_A(s, e));
  }();
  return b;
}

MPoly delta_tilde_0(const MPoly& dt) {
  const RingPtr& r = dt.ring();
  return dt.specialize({{r->index("t1"), FieldElem(0)},
                        {r->index("t2"), FieldElem(0)},
                        {r->index("t3"), FieldElem(0)},
                        {r->index("t4"), FieldElem(0)}});
}

std::array<MPoly, 4> uv_remainders(const MPoly& delta0) {
  RingPtr xy = xyz_ring(param_ring());
  auto V = [&](const char* n) { return MPoly::variable(xy, n); };
  MPoly x = V("x"), y = V("y"), z = V("z");
  MPoly f0 = x.pow(3) * y + y.pow(3) + V("t7") * x + V("t5") * x * x + V("s3") * y * y - z * z;
  const std::size_t iz = xy->index("z");
  std::array<MPoly, 4> fs{f0, f0.derivative("x"), f0.derivative("y"), f0.derivative("z")};
  std::array<MPoly, 4> out;
  const std::size_t it7 = param_ring()->index("t7");
  for (int k = 0; k < 4; ++k) {
    MPoly atz = fs[k].specialize({{iz, FieldElem(0)}});
    MPoly cleared = clear_at(atz, xy, atz.degree(xy->index("x")), atz.degree(xy->index("y")));
    out[k] = remainder_monic(cleared, delta0, it7);
  }
  return out;
}

std::optional<std::pair<Rational, Rational>> uv_formula(const Rational& s3, const Rational& t5, const Rational& t7) {
  std::vector<FieldElem> pt{s3, 0, 0, 0, 0, t5, t7};
  const auto& p = uv_polys();
  FieldElem m1 = p[0].evaluate(pt), n1 = p[1].evaluate(pt), m2 = p[2].evaluate(pt), n2 = p[3].evaluate(pt);
  if (n1.is_zero() || n2.is_zero()) return std::nullopt;
  return std::make_pair((m1 / n1).rational(), (m2 / n2).rational());
}

UvPoint random_uv_point(std::mt19937& rng, const MPoly& delta0) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  RingPtr pr = param_ring();
  for (int attempt = 0; attempt < 100; ++attempt) {
    Rational u(num(rng), den(rng)), v(num(rng), den(rng));
    u.canonicalize();
    v.canonicalize();
    if (sgn(u) == 0 || sgn(v) == 0) continue;
    // f~_0 = f~_0,x = f~_0,y = 0 at (u, v) solved for s3, t5, t7
    Rational s3 = -(u * u * u + 3 * v * v) / (2 * v);
    Rational t5 = (-2 * u * u * u * v + v * v * v + s3 * v * v) / (u * u);
    Rational t7 = -3 * u * u * v - 2 * t5 * u;
    if (sgn(t7) == 0) continue;
    MPoly uni = delta0.specialize({{pr->index("s3"), FieldElem(s3)}, {pr->index("t5"), FieldElem(t5)}});
    bool found = false;
    for (const auto& root : rational_roots(uni))
      if (root.value == t7) found = true;
    if (!found) throw ClaimViolation("constructed singular member is not a rational root of delta~_0");
    return UvPoint{s3, t5, t7, u, v};
  }
  throw AlgebraError("no admissible random point");
}

bool audit_row_weights(const PolyMatrix& A) {
  auto w = param_weights();
  for (std::size_t i = 0; i < 7; ++i) {
    std::optional<Rational> row;
    for (std::size_t j = 0; j < 7; ++j) {
      if (A(i, j).is_zero()) continue;
      auto d = weighted_degree(A(i, j), w);
      if (!d) return false;
      Rational shift = j < 4 ? Rational(2 * (static_cast<long>(j) + 1)) : Rational(2 * (static_cast<long>(j) - 4) + 3);
      Rational total = *d + shift;
      if (row && *row != total) return false;
      row = total;
    }
  }
  return true;
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

bool audit_det(const DiscriminantBundle& b, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  for (int it = 0; it < n; ++it) {
    std::vector<FieldElem> pt;
    for (int k = 0; k < 7; ++k) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      pt.emplace_back(q);
    }
    std::vector<std::vector<Rational>> m(7, std::vector<Rational>(7));
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) m[i][j] = b.A(i, j).evaluate(pt).rational();
    Rational lhs = rational_det(m);
    Rational rhs = b.k0 * pt[6].rational() * b.delta_tilde.evaluate(pt).rational();
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace e7
