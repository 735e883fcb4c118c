#include "e7/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace e7 {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw AlgebraError("too many ring variables");
}

Monomial::Monomial(std::size_t nvars, std::span<const unsigned> exps) : Monomial(nvars) {
  if (exps.size() != nvars) throw AlgebraError("exponent vector length mismatch");
  for (std::size_t i = 0; i < nvars; ++i) set(i, exps[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xffff) throw AlgebraError("exponent overflow");
  deg_ = deg_ - e_[i] + e;
  e_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    unsigned e = unsigned(e_[i]) + o.e_[i];
    if (e > 0xffff) throw AlgebraError("exponent overflow");
    r.e_[i] = static_cast<std::uint16_t>(e);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

Monomial Monomial::quotient(const Monomial& d) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - d.e_[i]);
  r.deg_ = deg_ - d.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, std::max(e_[i], o.e_[i]));
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n_; ++i) h = (h ^ e_[i]) * 1099511628211ull;
  return h;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {
struct DescGrevlex {
  bool operator()(const Term& a, const Term& b) const { return grevlex_less(b.mono, a.mono); }
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};
}  // namespace

// -------------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> vars, const ExtField& field) : vars_(std::move(vars)), field_(&field) {
  if (vars_.size() > kMaxVars) throw AlgebraError("too many ring variables");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty()) throw AlgebraError("empty variable name");
    if (vars_[i] == field.generator()) throw AlgebraError("variable name clashes with field generator: " + vars_[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j]) throw AlgebraError("duplicate variable: " + vars_[i]);
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw AlgebraError("unknown variable: " + std::string(name));
}

RingPtr make_ring(std::vector<std::string> vars, const ExtField& field) {
  return std::make_shared<const Ring>(std::move(vars), field);
}

RingPtr make_ring(std::string_view vars, const ExtField& field) {
  std::vector<std::string> names;
  std::string cur;
  for (char ch : vars) {
    if (ch == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) names.push_back(cur);
  return make_ring(std::move(names), field);
}

// --------------------------------------------------------- TermAccumulator

void TermAccumulator::add(const Monomial& m, const FieldElem& c) {
  auto [it, inserted] = map_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void TermAccumulator::add_product(const Monomial& m, const FieldElem& c1, const FieldElem& c2) {
  auto it = map_.find(m);
  if (it == map_.end()) {
    map_.emplace(m, c1 * c2);
  } else {
    it->second.add_mul(c1, c2);
  }
}

std::vector<Term> TermAccumulator::take_sorted() {
  std::vector<Term> out;
  out.reserve(map_.size());
  for (auto& [m, c] : map_)
    if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
  map_.clear();
  std::sort(out.begin(), out.end(), DescGrevlex{});
  return out;
}

// ------------------------------------------------------------------- MPoly

MPoly::MPoly(RingPtr ring, const FieldElem& constant) : ring_(std::move(ring)) {
  if (!constant.is_zero()) terms_.push_back(Term{Monomial(ring_->nvars()), constant.in(ring_->field())});
}

MPoly::MPoly(RingPtr ring, std::vector<Term> terms, bool sorted_and_clean) : ring_(std::move(ring)) {
  if (sorted_and_clean) {
    terms_ = std::move(terms);
    for (auto& t : terms_)
      if (&t.coeff.field() != &ring_->field()) t.coeff = t.coeff.in(ring_->field());
    return;
  }
  TermAccumulator acc;
  for (auto& t : terms) {
    if (t.mono.size() != ring_->nvars()) throw AlgebraError("monomial size does not match ring");
    acc.add(t.mono, t.coeff.in(ring_->field()));
  }
  terms_ = acc.take_sorted();
}

MPoly MPoly::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->nvars());
  m.set(index, 1);
  FieldElem one(ring->field(), Rational(1));
  return MPoly(ring, {Term{m, one}}, true);
}

MPoly MPoly::variable(RingPtr ring, std::string_view name) {
  std::size_t i = ring->index(name);
  return variable(std::move(ring), i);
}

MPoly MPoly::monomial(RingPtr ring, const Monomial& m, const FieldElem& c) {
  if (c.is_zero()) return MPoly(std::move(ring));
  return MPoly(ring, {Term{m, c.in(ring->field())}}, true);
}

FieldElem MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return FieldElem(ring_ ? ring_->field() : ExtField::rationals());
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned MPoly::degree(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

MPoly MPoly::coefficient(std::size_t var, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] != k) continue;
    Monomial m = t.mono;
    m.set(var, 0);
    out.push_back(Term{m, t.coeff});
  }
  if (k == 0) return MPoly(ring_, std::move(out), true);
  return MPoly(ring_, std::move(out));
}

FieldElem MPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grevlex_less(x, t.mono); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return FieldElem(ring_->field());
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> parts(degree(var) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned k = m[var];
    m.set(var, 0);
    parts[k].push_back(Term{m, t.coeff});
  }
  std::vector<MPoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) {
    std::sort(p.begin(), p.end(), DescGrevlex{});
    out.emplace_back(ring_, std::move(p), true);
  }
  return out;
}

void MPoly::check_ring(const MPoly& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) throw RingMismatch("operands live in different rings");
}

namespace {
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono == b[j].mono) {
      FieldElem c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back(Term{a[i].mono, std::move(c)});
      ++i;
      ++j;
    } else if (grevlex_less(b[j].mono, a[i].mono)) {
      out.push_back(a[i++]);
    } else {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
  return out;
}
}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  check_ring(o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_ring(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly& MPoly::operator*=(const FieldElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  FieldElem cc = c.in(ring_->field());
  for (auto& t : terms_) t.coeff *= cc;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return MPoly(a.ring_);
  if (a.size() == 1 || b.size() == 1) {
    const MPoly& single = a.size() == 1 ? a : b;
    const MPoly& other = a.size() == 1 ? b : a;
    std::vector<Term> out;
    out.reserve(other.size());
    const Term& s = single.terms_[0];
    for (const auto& t : other.terms_) {
      FieldElem c = t.coeff * s.coeff;
      if (!c.is_zero()) out.push_back(Term{t.mono * s.mono, std::move(c)});
    }
    return MPoly(a.ring_, std::move(out), true);
  }
  TermAccumulator acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc.add_product(s.mono * t.mono, s.coeff, t.coeff);
  return MPoly(a.ring_, acc.take_sorted(), true);
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result(ring_, FieldElem(ring_->field(), Rational(1)));
  MPoly base(*this);
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back(Term{m, t.coeff * FieldElem(Rational(e))});
  }
  return MPoly(ring_, std::move(out), true);
}

MPoly MPoly::shifted(const Monomial& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono * m, t.coeff});
  return MPoly(ring_, std::move(out), true);
}

FieldElem MPoly::evaluate(std::span<const FieldElem> point) const {
  const std::size_t n = ring_->nvars();
  if (point.size() != n) throw AlgebraError("evaluation point has wrong dimension");
  std::vector<std::vector<FieldElem>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(FieldElem(ring_->field(), Rational(1)));
  FieldElem sum(ring_->field());
  for (const auto& t : terms_) {
    FieldElem v = t.coeff;
    for (std::size_t i = 0; i < n; ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      auto& pw = powers[i];
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      v *= pw[e];
    }
    sum += v;
  }
  return sum;
}

MPoly MPoly::specialize(const std::vector<std::pair<std::size_t, FieldElem>>& values) const {
  const std::size_t n = ring_->nvars();
  std::vector<const FieldElem*> val(n, nullptr);
  for (const auto& [i, v] : values) val[i] = &v;
  std::vector<std::vector<FieldElem>> powers(n);
  for (std::size_t i = 0; i < n; ++i)
    if (val[i]) powers[i].push_back(FieldElem(ring_->field(), Rational(1)));
  TermAccumulator acc;
  for (const auto& t : terms_) {
    FieldElem c = t.coeff;
    Monomial m = t.mono;
    for (std::size_t i = 0; i < n; ++i) {
      if (!val[i] || !m[i]) continue;
      auto& pw = powers[i];
      while (pw.size() <= m[i]) pw.push_back(pw.back() * *val[i]);
      c *= pw[m[i]];
      m.set(i, 0);
    }
    if (!c.is_zero()) acc.add(m, c);
  }
  return MPoly(ring_, acc.take_sorted(), true);
}

MPoly MPoly::specialize(const std::vector<std::pair<std::string, FieldElem>>& values) const {
  std::vector<std::pair<std::size_t, FieldElem>> idx;
  for (const auto& [name, v] : values) idx.emplace_back(ring_->index(name), v);
  return specialize(idx);
}

MPoly MPoly::to_ring(const RingPtr& target) const {
  if (ring_->same_as(*target)) return MPoly(target, terms_, true);
  const std::size_t n = ring_->nvars();
  std::vector<std::optional<std::size_t>> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = target->index_of(ring_->var(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < n; ++i) {
      if (!t.mono[i]) continue;
      if (!map[i]) throw RingMismatch("variable " + ring_->var(i) + " does not exist in target ring");
      m.set(*map[i], t.mono[i]);
    }
    out.push_back(Term{m, t.coeff.in(target->field())});
  }
  return MPoly(target, std::move(out));
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return *this * terms_.front().coeff.inverse();
}

std::size_t MPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) h = h * 1000003u ^ (t.mono.hash() + 31 * t.coeff.hash());
  return h;
}

// ------------------------------------------------------------ free functions

MPoly substitute(const MPoly& p, const std::vector<std::optional<MPoly>>& images, const RingPtr& target) {
  const Ring& src = *p.ring();
  const std::size_t n = src.nvars();
  if (images.size() != n) throw AlgebraError("substitute: one image slot per variable required");
  std::vector<MPoly> base(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i]) {
      if (!images[i]->ring()->same_as(*target)) throw RingMismatch("substitute: image not in target ring");
      base[i] = *images[i];
    } else {
      base[i] = MPoly::variable(target, target->index(src.var(i)));
    }
  }
  std::vector<std::vector<MPoly>> powers(n);
  auto power = [&](std::size_t i, unsigned e) -> const MPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MPoly(target, FieldElem(target->field(), Rational(1))));
    while (pw.size() <= e) pw.push_back(pw.back() * base[i]);
    return pw[e];
  };
  TermAccumulator acc;
  for (const auto& t : p.terms()) {
    MPoly v(target, t.coeff.in(target->field()));
    for (std::size_t i = 0; i < n && !v.is_zero(); ++i)
      if (t.mono[i]) v = v * power(i, t.mono[i]);
    for (const auto& s : v.terms()) acc.add(s.mono, s.coeff);
  }
  return MPoly(target, acc.take_sorted(), true);
}

MPoly substitute(const MPoly& p, const std::map<std::string, MPoly>& images, const RingPtr& target) {
  std::vector<std::optional<MPoly>> slots(p.ring()->nvars());
  for (const auto& [name, img] : images) slots[p.ring()->index(name)] = img;
  return substitute(p, slots, target);
}

WeightedDegree weighted_degree(const MPoly& p, std::span<const Rational> weights) {
  if (weights.size() != p.ring()->nvars()) throw AlgebraError("weighted_degree: one weight per variable required");
  std::optional<Rational> deg;
  for (const auto& t : p.terms()) {
    Rational d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (t.mono[i]) d += weights[i] * t.mono[i];
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

std::optional<MPoly> try_divide(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw AlgebraError("division by zero polynomial");
  if (p.ring() && q.ring() && !p.ring()->same_as(*q.ring())) throw RingMismatch("operands live in different rings");
  if (p.is_zero()) return p;
  const RingPtr& ring = p.ring();
  if (q.size() == 1) {
    const Term& d = q.leading();
    FieldElem inv = d.coeff.inverse();
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!d.mono.divides(t.mono)) return std::nullopt;
      out.push_back(Term{t.mono.quotient(d.mono), t.coeff * inv});
    }
    return MPoly(ring, std::move(out), true);
  }
  // Remainder kept ordered so the leading term is always at begin().
  std::map<Monomial, FieldElem, DescGrevlex> rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
  const Term& lead = q.leading();
  FieldElem inv = lead.coeff.inverse();
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    Monomial qm = it->first.quotient(lead.mono);
    FieldElem qc = it->second * inv;
    rem.erase(it);
    for (std::size_t k = 1; k < q.size(); ++k) {
      const Term& t = q.terms()[k];
      Monomial m = t.mono * qm;
      FieldElem c = t.coeff * qc;
      auto [jt, inserted] = rem.try_emplace(m, -c);
      if (!inserted) {
        jt->second -= c;
        if (jt->second.is_zero()) rem.erase(jt);
      }
    }
    quot.push_back(Term{qm, std::move(qc)});
  }
  return MPoly(ring, std::move(quot), true);
}

MPoly exact_divide(const MPoly& p, const MPoly& q) {
  auto r = try_divide(p, q);
  if (!r) throw InexactDivision("inexact division: divisor does not divide dividend");
  return *r;
}

MPoly remainder_monic(const MPoly& p, const MPoly& m, std::size_t var) {
  const unsigned dm = m.degree(var);
  auto mc = m.coefficients_in(var);
  if (!(mc.back().is_constant() && mc.back().constant_term().is_one()))
    throw AlgebraError("remainder_monic: modulus is not monic in the chosen variable");
  auto pc = p.coefficients_in(var);
  const RingPtr& ring = p.ring();
  if (pc.size() <= dm) return p;
  for (std::size_t k = pc.size(); k-- > dm;) {
    if (pc[k].is_zero()) continue;
    MPoly lead = pc[k];
    for (std::size_t i = 0; i < dm; ++i) pc[k - dm + i] -= lead * mc[i];
    pc[k] = MPoly(ring);
  }
  MPoly r(ring);
  MPoly x = MPoly::variable(ring, var);
  MPoly xp(ring, FieldElem(ring->field(), Rational(1)));
  for (unsigned i = 0; i < dm; ++i) {
    r += pc[i] * xp;
    xp *= x;
  }
  return r;
}

}  // namespace e7
