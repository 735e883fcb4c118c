#include "e7/singclass.hpp"

#include "e7/groebner.hpp"
#include "e7/univariate.hpp"

#include <algorithm>

namespace e7 {

SingularityType SingularityType::A(unsigned k) {
  if (k < 1) throw AlgebraError("A_k needs k >= 1");
  return {SingTag::A, k};
}
SingularityType SingularityType::D(unsigned k) {
  if (k < 4) throw AlgebraError("D_k needs k >= 4");
  return {SingTag::D, k};
}
SingularityType SingularityType::E(unsigned k) {
  if (k < 6 || k > 8) throw AlgebraError("E_k needs k in 6..8");
  return {SingTag::E, k};
}

std::string SingularityType::str() const {
  switch (tag) {
    case SingTag::A: return "A" + std::to_string(index);
    case SingTag::D: return "D" + std::to_string(index);
    case SingTag::E: return "E" + std::to_string(index);
    case SingTag::Smooth: return "Smooth";
    case SingTag::NonIsolated: return "NonIsolated";
    case SingTag::NotSimple: return "NotSimple";
  }
  return "?";
}

SingularityType SingularityType::parse(const std::string& s) {
  if (s == "Smooth") return of(SingTag::Smooth);
  if (s == "NonIsolated") return of(SingTag::NonIsolated);
  if (s == "NotSimple") return of(SingTag::NotSimple);
  if (s.size() >= 2 && std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
    unsigned k = std::stoul(s.substr(1));
    if (s[0] == 'A') return A(k);
    if (s[0] == 'D') return D(k);
    if (s[0] == 'E') return E(k);
  }
  throw AlgebraError("bad singularity label: " + s);
}

const char* to_string(CubicStructure c) {
  switch (c) {
    case CubicStructure::ThreeDistinct: return "three-distinct";
    case CubicStructure::OneDouble: return "one-double";
    case CubicStructure::Triple: return "triple";
    case CubicStructure::Zero: return "zero";
  }
  return "?";
}

// ------------------------------------------------------------- root finding

std::vector<FieldElem> field_roots(const MPoly& p, std::size_t var) {
  if (p.is_zero()) throw AlgebraError("field_roots of the zero polynomial");
  const ExtField& K = p.ring()->field();
  std::vector<FieldElem> out;
  if (K.degree() == 1) {
    for (const auto& r : rational_roots(to_upoly(p, var))) out.emplace_back(K, r.value);
    return out;
  }
  // Weil restriction: var = sum u_i gen^i, split into coordinates over Q.
  const std::size_t n = K.degree();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i));
  auto RK = make_ring(names, K);
  auto RQ = make_ring(names, ExtField::rationals());
  MPoly image(RK);
  FieldElem gp(K, Rational(1));
  const FieldElem gen = FieldElem::generator(K);
  for (std::size_t i = 0; i < n; ++i) {
    image += MPoly::variable(RK, i) * gp;
    gp *= gen;
  }
  std::vector<std::optional<MPoly>> imgs(p.ring()->nvars(), MPoly(RK));
  imgs[var] = image;
  MPoly h = substitute(p, imgs, RK);
  std::vector<std::vector<Term>> parts(n);
  for (const auto& t : h.terms())
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(t.coeff.coord(i)) != 0) parts[i].push_back(Term{t.mono, FieldElem(t.coeff.coord(i))});
  std::vector<MPoly> eqs;
  for (auto& part : parts) eqs.emplace_back(RQ, std::move(part), true);
  for (const auto& pt : solve_zero_dimensional(eqs)) {
    FieldElem::Coords c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(pt[i].rational());
    out.emplace_back(K, c);
  }
  return out;
}

namespace {

void solve_rec(std::vector<MPoly> gens, std::vector<std::size_t> free_vars, std::vector<FieldElem>& cur,
               std::vector<std::vector<FieldElem>>& out) {
  std::erase_if(gens, [](const MPoly& g) { return g.is_zero(); });
  for (const auto& g : gens)
    if (g.is_constant()) return;
  if (free_vars.empty()) {
    out.push_back(cur);
    return;
  }
  if (gens.empty()) throw NonIsolatedLocus("solution set is not zero-dimensional");
  const RingPtr& ring = gens.front().ring();
  std::vector<std::size_t> perm = free_vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (std::find(perm.begin(), perm.end(), i) == perm.end()) perm.push_back(i);
  MonomialOrder lex(MonomialOrder::Kind::Lex, perm);
  auto gb = buchberger(gens, lex);
  if (gb.is_unit()) return;
  const std::size_t v = free_vars.back();
  const MPoly* elim = nullptr;
  for (const auto& g : gb.generators()) {
    bool only_v = true;
    for (const auto& t : g.terms())
      if (t.mono.degree() != t.mono[v]) only_v = false;
    if (only_v && !g.is_constant()) {
      elim = &g;
      break;
    }
  }
  if (!elim) throw NonIsolatedLocus("solution set is not zero-dimensional");
  free_vars.pop_back();
  for (const auto& r : field_roots(*elim, v)) {
    std::vector<MPoly> sub;
    for (const auto& g : gb.generators()) sub.push_back(g.specialize({{v, r}}));
    cur[v] = r;
    solve_rec(sub, free_vars, cur, out);
  }
  cur[v] = FieldElem(ring->field());
}

}  // namespace

std::vector<std::vector<FieldElem>> solve_zero_dimensional(const std::vector<MPoly>& gens) {
  if (gens.empty()) throw AlgebraError("empty system");
  const RingPtr& ring = gens.front().ring();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(i);
  std::vector<FieldElem> cur(ring->nvars(), FieldElem(ring->field()));
  std::vector<std::vector<FieldElem>> out;
  solve_rec(gens, vars, cur, out);
  return out;
}

// ---------------------------------------------------------- classification

SingularLocus find_rational_singular_points(const MPoly& g) {
  if (g.is_zero()) throw AlgebraError("zero polynomial");
  const RingPtr& ring = g.ring();
  if (ring->nvars() != 2) throw UnsupportedShape("expected a polynomial in two variables");
  std::vector<MPoly> tj{g, g.derivative(0), g.derivative(1)};
  SingularLocus loc;
  auto gb = buchberger(tj, MonomialOrder::grevlex(2));
  auto dim = quotient_dimension(gb);
  if (!dim) throw NonIsolatedLocus("non-isolated singular locus");
  loc.global_tjurina = *dim;
  if (*dim == 0) {
    loc.complete = true;
    return loc;
  }
  loc.points = solve_zero_dimensional(gb.generators());
  std::sort(loc.points.begin(), loc.points.end(), [](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      if (a[i].is_rational() && b[i].is_rational()) return a[i].rational() < b[i].rational();
      return a[i].str() < b[i].str();
    }
    return false;
  });
  std::size_t mass = 0;
  for (const auto& p : loc.points) {
    auto m = local_multiplicity_at(tj, p);
    if (!m) throw NonIsolatedLocus("non-isolated singular point");
    loc.tjurina.push_back(*m);
    mass += *m;
  }
  loc.complete = mass == loc.global_tjurina;
  return loc;
}

namespace {

using Dense = std::vector<FieldElem>;

void trim_fe(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::size_t gcd_degree(Dense a, Dense b) {
  trim_fe(a);
  trim_fe(b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      FieldElem f = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
      a.pop_back();
      trim_fe(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace

CubicStructure binary_cubic_root_structure(const std::array<FieldElem, 4>& c) {
  // C(t, 1) = c0 t^3 + c1 t^2 + c2 t + c3
  Dense f{c[3], c[2], c[1], c[0]};
  trim_fe(f);
  if (f.empty()) return CubicStructure::Zero;
  const std::size_t d = f.size() - 1;
  const bool at_infinity = d < 3;
  std::size_t distinct = 0;
  if (d > 0) {
    Dense df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * FieldElem(long(i)));
    distinct = d - gcd_degree(f, df);
  }
  distinct += at_infinity ? 1 : 0;
  if (distinct == 3) return CubicStructure::ThreeDistinct;
  if (distinct == 2) return CubicStructure::OneDouble;
  return CubicStructure::Triple;
}

GermReport classify_germ(const MPoly& g, const std::vector<FieldElem>& point) {
  const RingPtr& ring = g.ring();
  if (ring->nvars() != 2) throw UnsupportedShape("expected a polynomial in two variables");
  GermReport rep;
  rep.point = {point.at(0), point.at(1), FieldElem(ring->field())};
  MPoly h = translate(g, point);
  auto coeff = [&](unsigned i, unsigned j) {
    Monomial m(2);
    m.set(0, i);
    m.set(1, j);
    return h.coefficient(m);
  };
  if (!coeff(0, 0).is_zero() || !coeff(1, 0).is_zero() || !coeff(0, 1).is_zero()) {
    rep.type = SingularityType::of(SingTag::Smooth);
    rep.milnor = 0;
    rep.corank = 0;
    return rep;
  }
  FieldElem a = coeff(2, 0) * FieldElem(2), b = coeff(1, 1), c = coeff(0, 2) * FieldElem(2);
  unsigned rank = 0;
  if (!(a * c - b * b).is_zero()) rank = 2;
  else if (!a.is_zero() || !b.is_zero() || !c.is_zero()) rank = 1;
  rep.corank = 2 - rank;
  rep.milnor = local_multiplicity_at_origin({h.derivative(0), h.derivative(1)});
  if (!rep.milnor) {
    rep.type = SingularityType::of(SingTag::NonIsolated);
    return rep;
  }
  const unsigned mu = static_cast<unsigned>(*rep.milnor);
  if (rep.corank == 0) {
    rep.type = SingularityType::A(1);
  } else if (rep.corank == 1) {
    rep.type = SingularityType::A(mu);
  } else {
    auto s = binary_cubic_root_structure({coeff(3, 0), coeff(2, 1), coeff(1, 2), coeff(0, 3)});
    if (s == CubicStructure::ThreeDistinct && mu == 4) rep.type = SingularityType::D(4);
    else if (s == CubicStructure::OneDouble && mu >= 5) rep.type = SingularityType::D(mu);
    else if ((s == CubicStructure::Triple || s == CubicStructure::Zero) && mu >= 6 && mu <= 8 &&
             s != CubicStructure::Zero)
      rep.type = SingularityType::E(mu);
    else rep.type = SingularityType::of(SingTag::NotSimple);
  }
  return rep;
}

Suspension split_suspension(const MPoly& f) {
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->nvars();
  if (n != 3) throw UnsupportedShape("expected a polynomial in three variables");
  std::optional<std::size_t> zi;
  for (std::size_t v = n; v-- > 0;) {
    bool ok = true, seen = false;
    for (const auto& t : f.terms()) {
      if (!t.mono[v]) continue;
      if (t.mono[v] == 2 && t.mono.degree() == 2 && t.coeff.is_rational()) seen = true;
      else ok = false;
    }
    if (ok && seen) {
      zi = v;
      break;
    }
  }
  if (!zi) throw UnsupportedShape("not of the shape g(x,y) + c*z^2");
  std::vector<std::string> rest;
  for (std::size_t v = 0; v < n; ++v)
    if (v != *zi) rest.push_back(ring->var(v));
  auto R2 = make_ring(rest, ring->field());
  std::vector<Term> gt;
  for (const auto& t : f.terms())
    if (!t.mono[*zi]) gt.push_back(t);
  MPoly g0(ring, std::move(gt), true);
  return Suspension{g0.to_ring(R2), *zi};
}

SurfaceReport classify_surface(const MPoly& f) {
  auto s = split_suspension(f);
  auto loc = find_rational_singular_points(s.g);
  SurfaceReport rep;
  rep.global_tjurina = loc.global_tjurina;
  rep.complete = loc.complete;
  for (const auto& p : loc.points) {
    GermReport gr = classify_germ(s.g, p);
    // put z back into its slot
    std::vector<FieldElem> pt;
    for (std::size_t v = 0, k = 0; v < 3; ++v) pt.push_back(v == s.z_index ? FieldElem(f.ring()->field()) : p[k++]);
    gr.point = pt;
    rep.germs.push_back(std::move(gr));
  }
  return rep;
}

}  // namespace e7
