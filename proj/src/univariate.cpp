#include "e7/univariate.hpp"

#include "e7/polymatrix.hpp"

#include <algorithm>

namespace e7 {

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly to_upoly(const MPoly& p, std::size_t var) {
  UPoly out(p.is_zero() ? 0 : p.degree(var) + 1);
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != t.mono[var]) throw AlgebraError("polynomial is not univariate in " + p.ring()->var(var));
    out[t.mono[var]] = t.coeff.rational();
  }
  return out;
}

MPoly from_upoly(const UPoly& p, const RingPtr& ring, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (sgn(p[i]) == 0) continue;
    Monomial m(ring->nvars());
    m.set(var, static_cast<unsigned>(i));
    terms.push_back(Term{m, FieldElem(ring->field(), p[i])});
  }
  return MPoly(ring, std::move(terms), true);
}

UPoly upoly_derivative(const UPoly& p) {
  UPoly d(p.size() > 1 ? p.size() - 1 : 0);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

Rational upoly_eval(const UPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a0, const UPoly& b0) {
  UPoly a = a0, b = b0;
  trim(a);
  trim(b);
  if (b.empty()) throw AlgebraError("division by zero polynomial");
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

namespace {

// Positive rescaling to a primitive integer polynomial.
void make_primitive(UPoly& p) {
  trim(p);
  if (p.empty()) return;
  Integer l = 1, g = 0;
  for (const auto& c : p) {
    if (sgn(c) == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  for (auto& c : p) {
    c *= l;
    if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  for (auto& c : p) c /= g;
}

int sign_at(const UPoly& p, const Rational& x) { return sgn(upoly_eval(p, x)); }

struct Sturm {
  std::vector<UPoly> seq;
  explicit Sturm(const UPoly& p) {
    seq.push_back(p);
    UPoly d = upoly_derivative(p);
    make_primitive(d);
    while (!d.empty()) {
      seq.push_back(d);
      auto r = upoly_divmod(seq[seq.size() - 2], seq.back()).second;
      for (auto& c : r) c = -c;
      make_primitive(r);
      d = r;
    }
  }
  int variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& s : seq) {
      int sg = sign_at(s, x);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++v;
      last = sg;
    }
    return v;
  }
};

// Integer roots of a squarefree integer polynomial inside (lo, hi].
void isolate(const UPoly& q, const Sturm& st, const Integer& lo, const Integer& hi, int vlo, int vhi,
             std::vector<Integer>& out) {
  int count = vlo - vhi;
  if (count <= 0) return;
  if (hi - lo == 1) {
    if (sign_at(q, Rational(hi)) == 0) out.push_back(hi);
    return;
  }
  Integer mid = lo + (hi - lo) / 2;
  int vmid = st.variations(Rational(mid));
  isolate(q, st, lo, mid, vlo, vmid, out);
  isolate(q, st, mid, hi, vmid, vhi, out);
}

}  // namespace

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = upoly_divmod(a, b).second;
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Rational lc = a.back();
  for (auto& c : a) c /= lc;
  return a;
}

std::vector<RationalRoot> rational_roots(const UPoly& p0) {
  UPoly p = p0;
  trim(p);
  if (p.empty()) throw AlgebraError("rational_roots of the zero polynomial");
  std::vector<RationalRoot> roots;
  unsigned zero_mult = 0;
  while (sgn(p.front()) == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult) roots.push_back({Rational(0), zero_mult});
  if (p.size() > 1) {
    UPoly sf = upoly_divmod(p, upoly_gcd(p, upoly_derivative(p))).first;
    make_primitive(sf);
    // y = lc * x turns sf into a monic integer polynomial whose rational
    // roots are integers.
    const std::size_t n = sf.size() - 1;
    const Integer lc = sf.back().get_num();
    UPoly q(n + 1);
    Integer pw = 1;
    for (std::size_t i = n + 1; i-- > 0;) {
      // coefficient of y^i is a_i * lc^(n-1-i) for i < n, 1 for i = n
      if (i == n) {
        q[i] = 1;
        continue;
      }
      q[i] = Rational(sf[i].get_num() * pw);
      pw *= lc;
    }
    Integer bound = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Integer a = abs(q[i].get_num());
      if (a > bound) bound = a;
    }
    bound += 1;
    Sturm st(q);
    std::vector<Integer> ys;
    isolate(q, st, -bound, bound, st.variations(Rational(-bound)), st.variations(Rational(bound)), ys);
    for (const auto& y : ys) {
      Rational x(y, lc);
      x.canonicalize();
      unsigned mult = 0;
      UPoly cur = p;
      UPoly lin{-x, Rational(1)};
      for (;;) {
        auto [qq, r] = upoly_divmod(cur, lin);
        if (!r.empty()) break;
        ++mult;
        cur = std::move(qq);
      }
      roots.push_back({x, mult});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return roots;
}

std::vector<RationalRoot> rational_roots(const MPoly& p) {
  if (p.is_zero()) throw AlgebraError("rational_roots of the zero polynomial");
  std::size_t var = 0;
  bool found = false;
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) {
        if (found && i != var) throw AlgebraError("rational_roots needs a univariate polynomial");
        var = i;
        found = true;
      }
  if (!found) return {};
  return rational_roots(to_upoly(p, var));
}

MPoly resultant(const MPoly& p, const MPoly& q, std::size_t var) {
  if (p.is_zero() || q.is_zero()) throw AlgebraError("resultant with a zero polynomial");
  auto a = p.coefficients_in(var);
  auto b = q.coefficients_in(var);
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  const RingPtr& ring = p.ring();
  if (m + n == 0) return MPoly(ring, FieldElem(ring->field(), Rational(1)));
  PolyMatrix s(ring, m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = a[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = b[n - k];
  return minor_expansion_det(s);
}

}  // namespace e7
