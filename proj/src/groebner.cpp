#include "e7/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace e7 {

namespace {
std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}
}  // namespace

MonomialOrder MonomialOrder::grevlex(std::size_t n) { return MonomialOrder(Kind::Grevlex, iota(n)); }
MonomialOrder MonomialOrder::lex(std::size_t n) { return MonomialOrder(Kind::Lex, iota(n)); }
MonomialOrder MonomialOrder::grlex(std::size_t n) { return MonomialOrder(Kind::Grlex, iota(n)); }

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ != Kind::Lex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  if (kind_ == Kind::Grevlex) {
    for (std::size_t k = perm_.size(); k-- > 0;) {
      std::size_t i = perm_[k];
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i : perm_)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

namespace {

struct Desc {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->compare(a, b) > 0; }
};

// Polynomial with terms sorted descending for a specific order.
struct OPoly {
  std::vector<Term> terms;
  const Monomial& lm() const { return terms.front().mono; }
  bool zero() const { return terms.empty(); }
};

OPoly to_opoly(const MPoly& p, const MonomialOrder& ord) {
  OPoly r{p.terms()};
  if (ord.kind() != MonomialOrder::Kind::Grevlex || ord.permutation() != iota(ord.permutation().size()))
    std::sort(r.terms.begin(), r.terms.end(), [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  return r;
}

MPoly to_mpoly(const OPoly& p, const RingPtr& ring) { return MPoly(ring, p.terms); }

void make_monic(OPoly& p) {
  if (p.zero() || p.terms.front().coeff.is_one()) return;
  FieldElem inv = p.terms.front().coeff.inverse();
  for (auto& t : p.terms) t.coeff *= inv;
}

// Full reduction of f by the list; leading-term-only if tail is false.
OPoly reduce(const OPoly& f, const std::vector<OPoly>& basis, const MonomialOrder& ord, bool tail = true) {
  std::map<Monomial, FieldElem, Desc> rem{Desc{&ord}};
  for (const auto& t : f.terms) rem.emplace(t.mono, t.coeff);
  OPoly out;
  while (!rem.empty()) {
    auto it = rem.begin();
    const OPoly* div = nullptr;
    for (const auto& g : basis)
      if (!g.zero() && g.lm().divides(it->first)) {
        div = &g;
        break;
      }
    if (!div) {
      if (!tail && out.zero()) {
        // leading term is irreducible; keep the rest as is
        for (auto& [m, c] : rem) out.terms.push_back(Term{m, c});
        return out;
      }
      out.terms.push_back(Term{it->first, it->second});
      rem.erase(it);
      continue;
    }
    Monomial q = it->first.quotient(div->lm());
    FieldElem c = it->second / div->terms.front().coeff;
    rem.erase(it);
    for (std::size_t k = 1; k < div->terms.size(); ++k) {
      const Term& t = div->terms[k];
      FieldElem d = t.coeff * c;
      auto [jt, ins] = rem.try_emplace(t.mono * q, -d);
      if (!ins) {
        jt->second -= d;
        if (jt->second.is_zero()) rem.erase(jt);
      }
    }
  }
  return out;
}

OPoly spoly(const OPoly& f, const OPoly& g, const MonomialOrder& ord) {
  Monomial l = f.lm().lcm(g.lm());
  Monomial mf = l.quotient(f.lm()), mg = l.quotient(g.lm());
  FieldElem cf = f.terms.front().coeff.inverse(), cg = g.terms.front().coeff.inverse();
  std::map<Monomial, FieldElem, Desc> acc{Desc{&ord}};
  for (std::size_t k = 1; k < f.terms.size(); ++k) acc.emplace(f.terms[k].mono * mf, f.terms[k].coeff * cf);
  for (std::size_t k = 1; k < g.terms.size(); ++k) {
    FieldElem d = g.terms[k].coeff * cg;
    auto [it, ins] = acc.try_emplace(g.terms[k].mono * mg, -d);
    if (!ins) {
      it->second -= d;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  OPoly r;
  for (auto& [m, c] : acc) r.terms.push_back(Term{m, c});
  return r;
}

std::size_t fingerprint_of(const std::vector<MPoly>& gens) {
  std::size_t h = gens.size();
  for (const auto& g : gens) h = h * 0x9e3779b97f4a7c15ull ^ g.hash();
  return h;
}

}  // namespace

Monomial leading_monomial(const MPoly& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw AlgebraError("leading monomial of zero");
  const Monomial* best = &p.terms().front().mono;
  for (const auto& t : p.terms())
    if (ord.compare(t.mono, *best) > 0) best = &t.mono;
  return *best;
}

GroebnerBasis::GroebnerBasis(std::vector<MPoly> gens, MonomialOrder order, std::size_t fingerprint)
    : gens_(std::move(gens)), order_(std::move(order)), fingerprint_(fingerprint) {
  for (const auto& g : gens_) leads_.push_back(leading_monomial(g, order_));
}

bool GroebnerBasis::is_unit() const { return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero(); }

MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& ord) {
  return to_mpoly(spoly(to_opoly(f, ord), to_opoly(g, ord), ord), f.ring());
}

GroebnerBasis buchberger(const std::vector<MPoly>& gens_in, const MonomialOrder& ord) {
  if (gens_in.empty()) throw AlgebraError("buchberger needs at least one generator");
  const RingPtr ring = gens_in.front().ring();
  for (const auto& g : gens_in)
    if (!g.ring()->same_as(*ring)) throw RingMismatch("buchberger: generators in different rings");

  std::vector<OPoly> basis;
  for (const auto& g : gens_in) {
    if (g.is_zero()) continue;
    OPoly p = to_opoly(g, ord);
    make_monic(p);
    basis.push_back(std::move(p));
  }
  std::size_t fp = fingerprint_of(gens_in);
  if (basis.empty()) return GroebnerBasis({}, ord, fp);

  // pending pairs keyed by (lcm, i, j) so the normal strategy picks the smallest lcm first
  using Pair = std::pair<std::size_t, std::size_t>;
  auto pair_less = [&](const std::tuple<Monomial, std::size_t, std::size_t>& a,
                       const std::tuple<Monomial, std::size_t, std::size_t>& b) {
    int c = ord.compare(std::get<0>(a), std::get<0>(b));
    if (c) return c < 0;
    return std::make_pair(std::get<1>(a), std::get<2>(a)) < std::make_pair(std::get<1>(b), std::get<2>(b));
  };
  std::set<std::tuple<Monomial, std::size_t, std::size_t>, decltype(pair_less)> queue(pair_less);
  std::set<Pair> pending;
  auto add_pair = [&](std::size_t i, std::size_t j) {
    queue.emplace(basis[i].lm().lcm(basis[j].lm()), i, j);
    pending.emplace(std::min(i, j), std::max(i, j));
  };
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) add_pair(i, j);
  std::vector<char> alive(basis.size(), 1);

  while (!queue.empty()) {
    auto [l, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    if (!alive[i] || !alive[j]) continue;
    if (basis[i].lm().coprime(basis[j].lm())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || !alive[k]) continue;
      if (!basis[k].lm().divides(l)) continue;
      if (!pending.count({std::min(i, k), std::max(i, k)}) && !pending.count({std::min(j, k), std::max(j, k)}))
        chain = true;
    }
    if (chain) continue;
    OPoly h = reduce(spoly(basis[i], basis[j], ord), basis, ord);
    if (h.zero()) continue;
    make_monic(h);
    if (h.lm().is_one()) {
      basis.assign(1, h);
      alive.assign(1, 1);
      queue.clear();
      break;
    }
    basis.push_back(std::move(h));
    alive.push_back(1);
    std::size_t n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k)
      if (alive[k]) add_pair(k, n);
  }

  // reduced basis
  std::vector<OPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!alive[i]) continue;
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i || !alive[k]) continue;
      if (basis[k].lm().divides(basis[i].lm()) && (basis[k].lm() != basis[i].lm() || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<OPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    OPoly r{{minimal[i].terms.front()}};
    OPoly tail{std::vector<Term>(minimal[i].terms.begin() + 1, minimal[i].terms.end())};
    OPoly tr = reduce(tail, others, ord);
    r.terms.insert(r.terms.end(), tr.terms.begin(), tr.terms.end());
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const OPoly& a, const OPoly& b) { return ord.compare(a.lm(), b.lm()) < 0; });
  std::vector<MPoly> out;
  for (const auto& r : reduced) out.push_back(to_mpoly(r, ring));
  return GroebnerBasis(std::move(out), ord, fp);
}

MPoly normal_form(const MPoly& p, const GroebnerBasis& gb) {
  std::vector<OPoly> basis;
  for (const auto& g : gb.generators()) basis.push_back(to_opoly(g, gb.order()));
  return to_mpoly(reduce(to_opoly(p, gb.order()), basis, gb.order()), p.ring());
}

std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb) {
  if (gb.generators().empty()) return std::nullopt;
  if (gb.is_unit()) return 0;
  const std::size_t n = gb.generators().front().ring()->nvars();
  for (std::size_t i = 0; i < n; ++i) {
    bool pure = false;
    for (const auto& m : gb.leading_monomials())
      if (m.degree() == m[i] && m[i] > 0) pure = true;
    if (!pure) return std::nullopt;
  }
  return standard_monomials(gb).size();
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  std::vector<Monomial> out;
  if (gb.generators().empty() || gb.is_unit()) return out;
  const std::size_t n = gb.generators().front().ring()->nvars();
  std::vector<unsigned> bound(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned b = 0;
    for (const auto& m : gb.leading_monomials())
      if (m.degree() == m[i] && m[i] > 0 && (b == 0 || m[i] < b)) b = m[i];
    if (b == 0) throw AlgebraError("standard_monomials: ideal is not zero-dimensional");
    bound[i] = b;
  }
  const auto& leads = gb.leading_monomials();
  Monomial cur(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (const auto& l : leads)
        if (l.divides(cur)) return;
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e < bound[i]; ++e) {
      cur.set(i, e);
      // prune: if cur restricted to the first i+1 slots is already in the ideal, larger e are too
      bool dead = false;
      for (const auto& l : leads) {
        bool only_prefix = true;
        for (std::size_t k = i + 1; k < n; ++k)
          if (l[k]) only_prefix = false;
        if (only_prefix && l.divides(cur)) dead = true;
      }
      if (dead) break;
      rec(i + 1);
    }
    cur.set(i, 0);
  };
  rec(0);
  return out;
}

MPoly translate(const MPoly& p, const std::vector<FieldElem>& point) {
  const RingPtr& ring = p.ring();
  std::vector<std::optional<MPoly>> img(ring->nvars());
  for (std::size_t i = 0; i < point.size(); ++i)
    if (!point[i].is_zero()) img[i] = MPoly::variable(ring, i) + MPoly(ring, point[i].in(ring->field()));
  return substitute(p, img, ring);
}

std::optional<std::size_t> local_multiplicity_at_origin(const std::vector<MPoly>& gens, unsigned max_n) {
  if (gens.empty()) throw AlgebraError("local multiplicity needs generators");
  const RingPtr& ring = gens.front().ring();
  for (const auto& g : gens)
    if (!g.constant_term().is_zero()) throw AlgebraError("origin is not a common zero of the generators");
  const std::size_t n = ring->nvars();
  auto order = MonomialOrder::grevlex(n);
  auto dim_with_power = [&](unsigned N) {
    std::vector<MPoly> g = gens;
    Monomial m(n);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i + 1 == n) {
        m.set(i, left);
        g.push_back(MPoly::monomial(ring, m, FieldElem(ring->field(), Rational(1))));
        return;
      }
      for (unsigned e = 0; e <= left; ++e) {
        m.set(i, e);
        rec(i + 1, left - e);
      }
    };
    rec(0, N);
    auto gb = buchberger(g, order);
    return *quotient_dimension(gb);
  };
  std::size_t prev = dim_with_power(1);
  for (unsigned N = 2; N <= max_n + 1; ++N) {
    std::size_t d = dim_with_power(N);
    if (d == prev) return d;
    prev = d;
  }
  return std::nullopt;
}

std::optional<std::size_t> local_multiplicity_at(const std::vector<MPoly>& gens, const std::vector<FieldElem>& point,
                                                 unsigned max_n) {
  std::vector<MPoly> moved;
  for (const auto& g : gens) moved.push_back(translate(g, point));
  return local_multiplicity_at_origin(moved, max_n);
}

}  // namespace e7
