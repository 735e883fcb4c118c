#include "e7/e7family.hpp"

#include "e7/univariate.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

namespace e7 {

std::string data_dir() {
  if (const char* d = std::getenv("E7M_DATA"); d && *d) return d;
  return E7_DATA_DIR;
}

const DataFile& data_file(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<DataFile>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<DataFile>(DataFile::load(data_dir() + "/" + name));
  return *slot;
}

Rational dot(const Vec8& a, const Vec8& b) {
  Rational s = 0;
  for (int i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

Vec8 operator+(const Vec8& a, const Vec8& b) {
  Vec8 r;
  for (int i = 0; i < 8; ++i) r[i] = a[i] + b[i];
  return r;
}

Vec8 operator-(const Vec8& a, const Vec8& b) {
  Vec8 r;
  for (int i = 0; i < 8; ++i) r[i] = a[i] - b[i];
  return r;
}

Vec8 operator*(const Rational& s, const Vec8& a) {
  Vec8 r;
  for (int i = 0; i < 8; ++i) r[i] = s * a[i];
  return r;
}

Vec8 reflect(const Vec8& v, const Vec8& r) { return v - (2 * dot(v, r) / dot(r, r)) * r; }

namespace {

Vec8 unit(int i) {
  Vec8 v;
  v.fill(0);
  v[i - 1] = 1;
  return v;
}

// Gauss-Jordan over Q; the system is known to be nonsingular.
std::vector<Rational> solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw AlgebraError("singular weight system");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

RootSystemE7 build_roots() {
  RootSystemE7 rs;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) rs.roots.push_back(Rational(s1) * unit(i) + Rational(s2) * unit(j));
  rs.roots.push_back(unit(7) - unit(8));
  rs.roots.push_back(unit(8) - unit(7));
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) % 2 == 0) continue;
    Vec8 v = unit(7) - unit(8);
    for (int i = 0; i < 6; ++i) v = v + Rational((mask >> i) & 1 ? -1 : 1) * unit(i + 1);
    v = Rational(1, 2) * v;
    rs.roots.push_back(v);
    rs.roots.push_back(Rational(-1) * v);
  }
  Vec8 a1 = Rational(1, 2) * (unit(1) + unit(8));
  for (int i = 2; i <= 7; ++i) a1 = a1 - Rational(1, 2) * unit(i);
  rs.simple_roots[0] = a1;
  rs.simple_roots[1] = unit(1) + unit(2);
  for (int j = 3; j <= 7; ++j) rs.simple_roots[j - 1] = unit(j - 1) - unit(j - 2);

  Vec8 normal = unit(7) + unit(8);
  for (int j = 0; j < 7; ++j) {
    std::vector<std::vector<Rational>> a(8, std::vector<Rational>(8));
    std::vector<Rational> b(8);
    for (int k = 0; k < 7; ++k) {
      for (int c = 0; c < 8; ++c) a[k][c] = rs.simple_roots[k][c];
      b[k] = k == j ? 1 : 0;
    }
    for (int c = 0; c < 8; ++c) a[7][c] = normal[c];
    auto w = solve_dense(a, b);
    for (int c = 0; c < 8; ++c) rs.fundamental_weights[j][c] = w[c];
  }
  return rs;
}

std::vector<Vec8> build_weights() {
  std::vector<Vec8> lam;
  for (int j = 1; j <= 6; ++j) lam.push_back(unit(j) + Rational(1, 2) * (unit(8) - unit(7)));
  Vec8 l7;
  l7.fill(0);
  for (int j = 1; j <= 6; ++j) l7[j - 1] = Rational(1, 2);
  lam.push_back(l7);
  Vec8 sum;
  sum.fill(0);
  for (const auto& l : lam) sum = sum + l;
  std::vector<Vec8> pos = lam;
  for (int j = 0; j < 7; ++j)
    for (int k = j + 1; k < 7; ++k) pos.push_back(lam[j] + lam[k] - Rational(1, 3) * sum);
  std::vector<Vec8> all = pos;
  for (const auto& p : pos) all.push_back(Rational(-1) * p);
  return all;
}

// prod (Y - u^2) over the 28 positive weights, Y = X^2.
UPoly psi_in_square(const Vec8& v) {
  const auto& w = weights56();
  UPoly p{Rational(1)};
  for (std::size_t i = 0; i < 28; ++i) {
    Rational u = dot(w[i], v);
    Rational u2 = u * u;
    UPoly q(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k + 1] += p[k];
      q[k] -= u2 * p[k];
    }
    p = std::move(q);
  }
  return p;
}

const char* kStVars = "s3,t1,t2,t3,t4,t5,t7";

RingPtr st_ring() {
  static RingPtr r = make_ring(kStVars);
  return r;
}

RingPtr eps_ring() {
  static RingPtr r = make_ring("e1,e2,e3,e4,e5,e6,e7,e8,e9");
  return r;
}

RingPtr m_ring() {
  static RingPtr r = make_ring("m1,m2,m3,m4,m5,m7");
  return r;
}

const std::array<MPoly, 7>& pq_eps_map() {
  static const std::array<MPoly, 7> maps = [] {
    const auto& df = data_file("maps.txt");
    std::array<MPoly, 7> m;
    for (int i = 0; i < 7; ++i) m[i] = parse_poly(df.get("pq_from_eps", LambdaParams::names[i]), eps_ring());
    return m;
  }();
  return maps;
}

const std::array<MPoly, 7>& pq_st_map() {
  static const std::array<MPoly, 7> maps = [] {
    const auto& df = data_file("maps.txt");
    std::array<MPoly, 7> m;
    for (int i = 0; i < 7; ++i) m[i] = parse_poly(df.get("pq_from_st", LambdaParams::names[i]), st_ring());
    return m;
  }();
  return maps;
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim_ws(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<MPoly> parse_tuple(const std::string& text, const RingPtr& ring) {
  std::vector<MPoly> out;
  for (const auto& part : split_top(text, ',')) out.push_back(parse_poly(trim_ws(part), ring));
  return out;
}

std::string section(const char* prefix, int i, int lo, int hi) {
  if (i < lo || i > hi) throw AlgebraError("case index out of range: " + std::to_string(i));
  return std::string(prefix) + std::to_string(i);
}

MPoly in_var(const MPoly& p, const std::string& var, const MPoly& value) {
  return substitute(p, std::map<std::string, MPoly>{{var, value}}, value.ring());
}

std::vector<TableGerm> read_germs(const DataFile& df, const std::string& sec, const RingPtr& src,
                                  const MPoly& eta) {
  std::vector<TableGerm> out;
  for (const auto& key : df.keys(sec)) {
    if (key.rfind("germ", 0) != 0) continue;
    auto parts = split_top(df.get(sec, key), ':');
    if (parts.size() != 2) throw AlgebraError("malformed germ entry " + sec + "." + key);
    auto xy = parse_tuple(parts[0], src);
    if (xy.size() != 2) throw AlgebraError("germ point needs two coordinates: " + sec + "." + key);
    TableGerm g;
    g.point = {in_var(xy[0], "eta", eta), in_var(xy[1], "eta", eta)};
    g.type = SingularityType::parse(trim_ws(parts[1]));
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

const RootSystemE7& e7_roots() {
  static const RootSystemE7 rs = build_roots();
  return rs;
}

const std::vector<Vec8>& weights56() {
  static const std::vector<Vec8> w = build_weights();
  return w;
}

MPoly psi_poly(const Vec8& v) {
  UPoly sq = psi_in_square(v);
  UPoly full(2 * sq.size() - 1);
  for (std::size_t k = 0; k < sq.size(); ++k) full[2 * k] = sq[k];
  static RingPtr rx = make_ring("X");
  return from_upoly(full, rx, 0);
}

std::vector<Rational> epsilons(const Vec8& v) {
  UPoly sq = psi_in_square(v);
  std::vector<Rational> eps(28);
  for (int nu = 1; nu <= 28; ++nu) {
    Rational c = sq[28 - nu];
    eps[nu - 1] = nu % 2 ? -c : c;
  }
  return eps;
}

LambdaParams constant_lambda(const std::array<Rational, 7>& values, const RingPtr& ring) {
  LambdaParams l;
  for (int i = 0; i < 7; ++i) l.v[i] = MPoly(ring, FieldElem(ring->field(), values[i]));
  return l;
}

FamilyParams constant_family(const std::array<FieldElem, 7>& values, const RingPtr& ring) {
  FamilyParams f;
  for (int i = 0; i < 7; ++i) f.v[i] = MPoly(ring, values[i].in(ring->field()));
  return f;
}

std::array<FieldElem, 7> values_of(const std::array<MPoly, 7>& v) {
  std::array<FieldElem, 7> out;
  for (int i = 0; i < 7; ++i) {
    if (!v[i].is_constant()) throw AlgebraError("parameter is not constant: " + v[i].str());
    out[i] = v[i].constant_term();
  }
  return out;
}

LambdaParams pq_from_eps(const std::vector<MPoly>& eps) {
  if (eps.size() < 9) throw AlgebraError("pq_from_eps needs eps_1..eps_9");
  const RingPtr& target = eps[0].ring();
  // The displayed formulas are stated for the signed coefficients of Psi.
  std::vector<std::optional<MPoly>> images(9);
  for (int nu = 1; nu <= 9; ++nu) images[nu - 1] = nu % 2 ? -eps[nu - 1] : eps[nu - 1];
  LambdaParams l;
  for (int i = 0; i < 7; ++i) l.v[i] = substitute(pq_eps_map()[i], images, target);
  return l;
}

LambdaParams pq_from_eps(const std::vector<Rational>& eps) {
  RingPtr r = eta_ring();
  std::vector<MPoly> e;
  for (std::size_t i = 0; i < 9; ++i) e.emplace_back(r, FieldElem(eps.at(i)));
  return pq_from_eps(e);
}

LambdaParams st_to_pq(const FamilyParams& p) {
  const RingPtr& target = p.v[0].ring();
  std::vector<std::optional<MPoly>> images(p.v.begin(), p.v.end());
  LambdaParams l;
  for (int i = 0; i < 7; ++i) l.v[i] = substitute(pq_st_map()[i], images, target);
  return l;
}

PqToSt pq_to_st(const std::array<Rational, 7>& lam) {
  const Rational &p0 = lam[0], &p1 = lam[1], &q0 = lam[2], &q1 = lam[3], &q2 = lam[4], &q3 = lam[5], &q4 = lam[6];
  static RingPtr rt = make_ring("t2");
  MPoly t = MPoly::variable(rt, 0);
  auto C = [&](const Rational& r) { return MPoly(rt, FieldElem(r)); };
  MPoly P = C(27 * p0) + C(9 * p1) * t + t.pow(3);
  MPoly N = C(81 * q0) + C(27 * q1) * t + C(9 * q2) * t.pow(2) + C(3 * q3) * t.pow(3) + C(q4) * t.pow(4);
  PqToSt out;
  out.eliminant = C(4) * P.pow(3) + C(81) * N.pow(2);
  UPoly up = to_upoly(P, 0), un = to_upoly(N, 0);
  for (const auto& root : rational_roots(out.eliminant)) {
    const Rational& t2 = root.value;
    Rational pv = upoly_eval(up, t2), nv = upoly_eval(un, t2);
    Rational s3 = sgn(pv) == 0 ? Rational(0) : Rational(-3 * nv / (2 * pv));
    if (6 * s3 * s3 * s3 != nv || 9 * s3 * s3 != -pv) continue;
    std::array<Rational, 7> sol;
    sol[0] = s3;
    sol[1] = q4;
    sol[2] = t2;
    sol[3] = (3 * q3 + s3 + 4 * q4 * t2) / 3;
    sol[4] = (3 * p1 + t2 * t2) / 3;
    sol[5] = (3 * q2 + 3 * q3 * t2 + s3 * t2 + 2 * q4 * t2 * t2) / 3;
    sol[6] = (27 * q1 + 9 * p1 * s3 + 18 * q2 * t2 + 9 * q3 * t2 * t2 + 3 * s3 * t2 * t2 + 4 * q4 * t2 * t2 * t2) / 27;
    std::array<FieldElem, 7> fe;
    for (int i = 0; i < 7; ++i) fe[i] = sol[i];
    auto back = values_of(st_to_pq(constant_family(fe, rt)).v);
    for (int i = 0; i < 7; ++i)
      if (back[i] != FieldElem(lam[i])) throw AlgebraError("pq_to_st: back substitution failed");
    out.solutions.push_back(sol);
  }
  return out;
}

MPoly shioda_phi(const std::array<Rational, 7>& lam) {
  static RingPtr rcd = make_ring("c,d");
  MPoly c = MPoly::variable(rcd, 0), d = MPoly::variable(rcd, 1);
  auto K = [&](const Rational& r) { return MPoly(rcd, FieldElem(r)); };
  const Rational &p0 = lam[0], &p1 = lam[1], &q0 = lam[2], &q1 = lam[3], &q2 = lam[4], &q3 = lam[5], &q4 = lam[6];
  MPoly a = c * c - K(q4);
  MPoly b = K(2) * c * d - a.pow(3) - K(q3);
  MPoly ce2 = K(3) * a * a * b + K(p1) * a + K(q2) - d * d;  // 2ce
  MPoly r1 = d * ce2 - c * (K(3) * a * b * b + K(p0) * a + K(p1) * b + K(q1));
  MPoly r2 = ce2 * ce2 - K(4) * c * c * (b.pow(3) + K(p0) * b + K(q0));
  if (r1.degree(1) != 3 || r2.degree(1) != 4) throw DegenerateSpecialization("specialization degenerate, perturb lambda");
  MPoly res = resultant(r1, r2, 1);
  if (res.is_zero()) throw DegenerateSpecialization("specialization degenerate, perturb lambda");
  UPoly u = to_upoly(res, 0);
  // Phi may vanish at c = 0 itself, so only the excess over degree 56 is removed.
  if (u.size() < 57) throw DegenerateSpecialization("resultant has degree " + std::to_string(u.size() - 1));
  const std::size_t excess = u.size() - 57;
  for (std::size_t k = 0; k < excess; ++k)
    if (sgn(u[k]) != 0) throw DegenerateSpecialization("resultant not divisible by c^" + std::to_string(excess));
  u.erase(u.begin(), u.begin() + static_cast<long>(excess));
  Rational lc = u.back();
  for (auto& x : u) x /= lc;
  for (std::size_t k = 1; k < u.size(); k += 2)
    if (sgn(u[k]) != 0) throw AlgebraError("Phi is not even");
  static RingPtr rx = make_ring("X");
  return from_upoly(u, rx, 0);
}

RingPtr eta_ring(const ExtField& field) {
  if (&field == &ExtField::rationals()) {
    static RingPtr r = make_ring("eta");
    return r;
  }
  if (&field == &ExtField::eisenstein()) {
    static RingPtr r = make_ring("eta", ExtField::eisenstein());
    return r;
  }
  return make_ring("eta", field);
}

LambdaParams lambda_case(int i, const MPoly& eta) {
  const auto& df = data_file("adjacency.txt");
  auto sec = section("case", i, 1, 7);
  LambdaParams l;
  for (int k = 0; k < 7; ++k) l.v[k] = in_var(parse_poly(df.get(sec, LambdaParams::names[k]), eta_ring()), "eta", eta);
  return l;
}

std::array<Rational, 7> lambda_case(int i, const Rational& eta) {
  RingPtr r = eta_ring();
  auto l = lambda_case(i, MPoly(r, FieldElem(eta)));
  auto v = values_of(l.v);
  std::array<Rational, 7> out;
  for (int k = 0; k < 7; ++k) out[k] = v[k].rational();
  return out;
}

MPoly eta_of_xi(int i) {
  static RingPtr rxi = make_ring("xi");
  return parse_poly(data_file("adjacency.txt").get(section("case", i, 1, 7), "eta"), rxi);
}

std::array<MPoly, 8> case_vector(int i) {
  static RingPtr rxi = make_ring("xi");
  auto v = parse_tuple(data_file("adjacency.txt").get(section("case", i, 1, 7), "vector"), rxi);
  if (v.size() != 8) throw AlgebraError("case vector needs 8 coordinates");
  std::array<MPoly, 8> out;
  for (int k = 0; k < 8; ++k) out[k] = v[k];
  return out;
}

Vec8 case_weight_vector(int i) {
  auto v = case_vector(i);
  Vec8 out;
  FieldElem one(1);
  for (int k = 0; k < 8; ++k) out[k] = 2 * v[k].evaluate(std::span<const FieldElem>(&one, 1)).rational();
  return out;
}

std::vector<FamilyParams> solution_table(int i, const MPoly& eta) {
  const auto& df = data_file("solutions.txt");
  auto sec = section("case", i, 1, 7);
  std::vector<FamilyParams> out;
  for (const auto& key : df.keys(sec)) {
    auto t = parse_tuple(df.get(sec, key), eta_ring());
    if (t.size() != 7) throw AlgebraError("solution row needs 7 entries: " + sec + "." + key);
    FamilyParams f;
    for (int k = 0; k < 7; ++k) f.v[k] = in_var(t[k], "eta", eta);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<TableGerm> case_germs(int i, const RingPtr& eta) {
  return read_germs(data_file("adjacency.txt"), section("case", i, 1, 7), eta_ring(), MPoly::variable(eta, "eta"));
}

const ExtField& st34_field(int i) { return i == 4 ? ExtField::eisenstein() : ExtField::rationals(); }

FamilyParams st34_tau(int i, const MPoly& eta) {
  auto sec = section("case", i, 1, 6);
  const ExtField& f = st34_field(i);
  RingPtr src = eta_ring(f);
  RingPtr target = eta.ring();
  if (f.degree() > 1 && &target->field() != &f) target = make_ring(target->vars(), f);
  MPoly e = eta.to_ring(target);
  auto t = parse_tuple(data_file("st34.txt").get(sec, "tau"), src);
  if (t.size() != 6) throw AlgebraError("tau needs 6 entries");
  FamilyParams out;
  out.v[0] = MPoly(target);
  for (int k = 0; k < 6; ++k) out.v[k + 1] = in_var(t[k], "eta", e);
  return out;
}

std::vector<TableGerm> st34_germs(int i, const RingPtr& eta) {
  auto sec = section("case", i, 1, 6);
  return read_germs(data_file("st34.txt"), sec, eta_ring(st34_field(i)), MPoly::variable(eta, "eta"));
}

std::array<MPoly, 6> st34_x(int i, const RingPtr& m) {
  auto v = parse_tuple(data_file("st34.txt").get(section("case", i, 1, 6), "x"), make_ring("m", st34_field(i)));
  if (v.size() != 6) throw AlgebraError("x needs 6 entries");
  std::array<MPoly, 6> out;
  for (int k = 0; k < 6; ++k) out[k] = v[k].to_ring(m);
  return out;
}

std::array<MPoly, 6> st34_sums(int i, const RingPtr& m) {
  auto v = parse_tuple(data_file("st34.txt").get(section("case", i, 1, 6), "sums"), make_ring("m", st34_field(i)));
  if (v.size() != 6) throw AlgebraError("sums needs 6 entries");
  std::array<MPoly, 6> out;
  for (int k = 0; k < 6; ++k) out[k] = v[k].to_ring(m);
  return out;
}

MPoly st34_eta_of_m(int i, const RingPtr& m) {
  return parse_poly(data_file("st34.txt").get(section("case", i, 1, 6), "eta"), make_ring("m", st34_field(i))).to_ring(m);
}

std::array<MPoly, 6> st34_t_from_m(const std::array<MPoly, 6>& m) {
  static const std::array<MPoly, 6> maps = [] {
    const auto& df = data_file("st34_cs.txt");
    const char* names[6] = {"t1", "t2", "t3", "t4", "t5", "t7"};
    std::array<MPoly, 6> out;
    for (int k = 0; k < 6; ++k) out[k] = parse_poly(df.get("t_from_m", names[k]), m_ring());
    return out;
  }();
  std::vector<std::optional<MPoly>> images(m.begin(), m.end());
  std::array<MPoly, 6> out;
  for (int k = 0; k < 6; ++k) out[k] = substitute(maps[k], images, m[0].ring());
  return out;
}

std::array<MPoly, 6> power_sums(const std::array<MPoly, 6>& x) {
  const RingPtr& r = x[0].ring();
  std::array<MPoly, 6> out;
  for (int j = 1; j <= 5; ++j) {
    MPoly s(r);
    for (const auto& xi : x) s += xi.pow(3 * j);
    out[j - 1] = s;
  }
  MPoly q(r, FieldElem(r->field(), Rational(1)));
  for (const auto& xi : x) q *= xi;
  out[5] = q;
  return out;
}

RingPtr xyz_ring(const RingPtr& params) {
  std::vector<std::string> vars{"x", "y", "z"};
  for (const auto& v : params->vars())
    if (v != "x" && v != "y" && v != "z") vars.push_back(v);
  return make_ring(vars, params->field());
}

MPoly f_e7(const LambdaParams& l, const RingPtr& target) {
  MPoly x = MPoly::variable(target, "x"), y = MPoly::variable(target, "y"), z = MPoly::variable(target, "z");
  auto P = [&](int k) { return l.v[k].to_ring(target); };
  return -z * z + y.pow(3) + y * (P(0) + P(1) * x + x.pow(3)) + P(2) + P(3) * x + P(4) * x.pow(2) + P(5) * x.pow(3) +
         P(6) * x.pow(4);
}

MPoly f_tilde(const FamilyParams& p, const RingPtr& target) {
  MPoly x = MPoly::variable(target, "x"), y = MPoly::variable(target, "y"), z = MPoly::variable(target, "z");
  auto P = [&](int k) { return p.v[k].to_ring(target); };
  // s3 t1 t2 t3 t4 t5 t7
  return y.pow(3) + x.pow(3) * y + P(6) * x + P(5) * x.pow(2) + P(3) * x.pow(3) + P(1) * x.pow(4) +
         y * (P(4) * x + P(2) * x.pow(2)) + P(0) * y * y - z * z;
}

FamilyParams with_s3_zero(const std::array<MPoly, 6>& tau) {
  FamilyParams f;
  f.v[0] = MPoly(tau[0].ring());
  for (int k = 0; k < 6; ++k) f.v[k + 1] = tau[k];
  return f;
}

}  // namespace e7
