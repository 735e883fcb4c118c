// Acceptance criteria 1-9; one line per criterion, exit status 1 if any fails.
#include "e7/discrim.hpp"
#include "e7/e7family.hpp"
#include "e7/groebner.hpp"
#include "e7/parse.hpp"
#include "e7/polymatrix.hpp"
#include "e7/singclass.hpp"
#include "e7/verify.hpp"
#include "e7/wdvv.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <set>

using namespace e7;

namespace {

// time budgets in milliseconds
constexpr double kAdjacencyCaseMs = 60e3;
constexpr double kSt34CaseMs = 120e3;
constexpr double kDiscriminantMs = 30 * 60e3;
constexpr double kShiodaCaseMs = 10 * 60e3;
constexpr double kWdvvMs = 60 * 60e3;
constexpr int kRandomTau = 10;
constexpr unsigned kBruteSpan = 12;
constexpr unsigned kBruteDegree = 6;

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

Verdict from_suite(const std::string& suite, double per_check_ms, const std::vector<std::string>& only = {}) {
  Verdict v;
  SuiteOptions opt;
  opt.threads = threads_from_env();
  auto reps = run_suite(suite, opt);
  std::size_t n = 0;
  for (const auto& r : reps)
    for (const auto& c : r.checks) {
      if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
      ++n;
      if (c.status != CheckStatus::Pass) v.fail(c.id + ": " + c.detail);
      if (c.elapsed_ms > per_check_ms) v.fail(c.id + " over budget (" + std::to_string(c.elapsed_ms) + " ms)");
    }
  if (v.ok) v.detail = std::to_string(n) + " checks";
  return v;
}

Verdict criterion1() { return from_suite("adjacency", kAdjacencyCaseMs); }
Verdict criterion2() { return from_suite("st34", kSt34CaseMs); }

Verdict criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v = from_suite("discriminant", kDiscriminantMs,
                         {"pipeline", "det A = k0 t7 delta~", "A|t1..t4=0 = B", "det(B) expansion", "delta_ST34", "det audit"});
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (ms > kDiscriminantMs) v.fail("pipeline over budget");
  return v;
}

Verdict criterion4() {
  Verdict v;
  auto rem = uv_remainders(delta_tilde_0(discriminant().delta_tilde));
  for (int k = 0; k < 4; ++k)
    if (!rem[k].is_zero()) v.fail("congruence " + std::to_string(k) + " has a nonzero remainder");
  if (v.ok) v.detail = "f~0, d_x, d_y, d_z vanish mod delta~0";
  return v;
}

Verdict criterion5() { return from_suite("shioda", kShiodaCaseMs); }

Verdict criterion6() {
  Verdict v;
  RingPtr r = eta_ring();
  MPoly eta = MPoly::variable(r, 0);
  std::size_t rows = 0;
  for (int i = 1; i <= 7; ++i) {
    for (const auto& row : solution_table(i, eta)) {
      ++rows;
      if (st_to_pq(row) != lambda_case(i, eta)) v.fail("st_to_pq row of case " + std::to_string(i));
    }
    auto s = pq_to_st(lambda_case(i, Rational(1)));
    for (const auto& row : solution_table(i, MPoly(r, FieldElem(1)))) {
      auto vals = values_of(row.v);
      std::array<Rational, 7> q;
      for (int k = 0; k < 7; ++k) q[k] = vals[k].rational();
      if (std::find(s.solutions.begin(), s.solutions.end(), q) == s.solutions.end())
        v.fail("pq_to_st misses a row of case " + std::to_string(i));
    }
  }
  if (v.ok) v.detail = std::to_string(rows) + " rows";
  return v;
}

Verdict criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v = from_suite("wdvv", kWdvvMs);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (ms > kWdvvMs) v.fail("suite over budget");
  return v;
}

Verdict criterion8() {
  Verdict v;
  const auto& d = discriminant();
  for (int i = 1; i <= 6; ++i) {
    RingPtr er = eta_ring(st34_field(i));
    auto vals = values_of(st34_tau(i, MPoly(er, FieldElem(1).in(st34_field(i)))).v);
    if (i == 2 || i == 3 || i == 6) {
      if (!vals[6].is_zero()) v.fail("t7(tau[" + std::to_string(i) + "]) != 0");
    } else if (!d.delta_st34.evaluate(vals).is_zero()) {
      v.fail("delta_ST34(tau[" + std::to_string(i) + "]) != 0");
    }
  }
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  RingPtr R = make_ring("x,y,z");
  int done = 0;
  while (done < kRandomTau) {
    std::array<FieldElem, 7> p;
    p[0] = FieldElem(0);
    p[6] = FieldElem(0);
    for (int k = 1; k <= 5; ++k) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      p[k] = FieldElem(q);
    }
    if (d.delta_st34.evaluate(std::vector<FieldElem>(p.begin(), p.end())).is_zero()) continue;
    ++done;
    auto rep = classify_surface(f_tilde(constant_family(p, R), R));
    bool one = rep.complete && rep.germs.size() == 1 && rep.germs[0].type == SingularityType::A(1) &&
               rep.germs[0].point[0].is_zero() && rep.germs[0].point[1].is_zero() && rep.germs[0].point[2].is_zero();
    if (!one) v.fail("random tau #" + std::to_string(done) + " does not give a single A1 at the origin");
  }
  if (v.ok) v.detail = "tau table and " + std::to_string(kRandomTau) + " random tau";
  return v;
}

// dim Q[x,y]/I by linear algebra: span the shifts of degree <= D, count the
// quotient inside degree <= d and require every monomial of degree d+1, d+2 in the span
std::optional<std::size_t> brute_quotient_dimension(const std::vector<MPoly>& gens, unsigned D, unsigned d) {
  std::vector<Monomial> basis;  // descending degree, so pivots sit on the top-degree part
  for (int deg = static_cast<int>(D); deg >= 0; --deg)
    for (int a = deg; a >= 0; --a) {
      Monomial m(2);
      m.set(0, a);
      m.set(1, deg - a);
      basis.push_back(m);
    }
  auto col = [&](const Monomial& m) {
    return std::find(basis.begin(), basis.end(), m) - basis.begin();
  };
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens)
    for (const auto& m : basis) {
      MPoly p = g.shifted(m);
      if (p.total_degree() > D) continue;
      std::vector<Rational> row(basis.size(), Rational(0));
      for (const auto& t : p.terms()) row[col(t.mono)] = t.coeff.rational();
      rows.push_back(row);
    }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < basis.size() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t k = c; k < basis.size(); ++k) rows[i][k] -= f * rows[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  // reduced echelon form: a monomial is in the span iff its reduction vanishes
  auto in_span = [&](const Monomial& m) {
    std::vector<Rational> v(basis.size(), Rational(0));
    v[col(m)] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      std::size_t c = pivots[r];
      if (sgn(v[c]) == 0) continue;
      Rational f = v[c] / rows[r][c];
      for (std::size_t k = c; k < basis.size(); ++k) v[k] -= f * rows[r][k];
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
  };
  std::size_t low = 0, low_rank = 0;
  for (const auto& m : basis) {
    if (m.degree() <= d) ++low;
    if (m.degree() == d + 1 || m.degree() == d + 2)
      if (!in_span(m)) return std::nullopt;
  }
  for (auto c : pivots)
    if (basis[c].degree() <= d) ++low_rank;
  return low - low_rank;
}

Verdict criterion9() {
  Verdict v;
  RingPtr r = make_ring("x,y");
  std::vector<MPoly> gens{parse_poly("3*x^2*y", r), parse_poly("x^3 + 3*y^2", r)};
  auto gb = buchberger(gens, MonomialOrder::grevlex(2));
  auto q = quotient_dimension(gb);
  auto brute = brute_quotient_dimension(gens, kBruteSpan, kBruteDegree);
  if (!q || *q != 7) v.fail("Groebner staircase gives " + (q ? std::to_string(*q) : std::string("infinite")));
  if (!brute || *brute != 7) v.fail("linear algebra gives " + (brute ? std::to_string(*brute) : std::string("no bound")));

  // local multiplicities add up to the global one
  std::vector<std::pair<std::string, MPoly>> surfaces;
  {
    RingPtr er = eta_ring();
    RingPtr R = make_ring("x,y,z");
    for (int i : {3, 4, 5, 6}) {
      LambdaParams l = lambda_case(i, MPoly(er, FieldElem(1)));
      for (auto& p : l.v) p = p.to_ring(R);
      surfaces.emplace_back("E7(" + std::to_string(i) + ")", f_e7(l, R));
    }
    for (int i : {1, 2, 5}) {
      RingPtr e = eta_ring(st34_field(i));
      surfaces.emplace_back("ST34(" + std::to_string(i) + ")", f_tilde(st34_tau(i, MPoly(e, FieldElem(1))), R));
    }
  }
  for (const auto& [name, f] : surfaces) {
    auto sp = split_suspension(f);
    std::vector<MPoly> jac{sp.g, sp.g.derivative(0), sp.g.derivative(1)};
    auto global = quotient_dimension(buchberger(jac, MonomialOrder::grevlex(2)));
    auto locus = find_rational_singular_points(sp.g);
    std::size_t sum = 0;
    for (const auto& pt : locus.points) {
      auto m = local_multiplicity_at(jac, pt);
      if (!m) {
        v.fail(name + ": local multiplicity did not stabilize");
        continue;
      }
      sum += *m;
    }
    if (!locus.complete || locus.points.size() < 2 || !global || *global != sum)
      v.fail(name + ": local sum " + std::to_string(sum) + " vs global " + (global ? std::to_string(*global) : "inf"));
  }
  if (v.ok) v.detail = "mu(E7) = 7 twice; additivity on " + std::to_string(surfaces.size()) + " surfaces";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::size_t> only;  // optional criterion numbers
  for (int i = 1; i < argc; ++i) only.insert(std::stoul(argv[i]));
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"adjacency table", criterion1},      {"ST34 table", criterion2},
      {"discriminant pipeline", criterion3}, {"point-formula congruences", criterion4},
      {"Shioda identity", criterion5},      {"parameter maps", criterion6},
      {"WDVV suite", criterion7},           {"vanishing consistency", criterion8},
      {"oracle suite", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("error: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.ok) ++failed;
    std::cout << "criterion " << i + 1 << " " << (v.ok ? "PASS" : "FAIL") << " " << criteria[i].first << ": " << v.detail
              << " [" << std::fixed << std::setprecision(1) << s << " s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
