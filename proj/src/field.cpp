#include "e7/field.hpp"

#include <sstream>

namespace e7 {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw AlgebraError("malformed rational: " + std::string(text));
  if (r.get_den() == 0) throw AlgebraError("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

ExtField::ExtField(std::string name, std::string generator, std::vector<Rational> minimal_polynomial)
    : name_(std::move(name)), generator_(std::move(generator)), minpoly_(std::move(minimal_polynomial)) {
  if (minpoly_.size() < 2 || minpoly_.back() != 1) throw AlgebraError("minimal polynomial must be monic of degree >= 1");
  degree_ = minpoly_.size() - 1;
  // g^deg = -sum m_i g^i, then multiply up.
  std::vector<Rational> cur(degree_);
  for (std::size_t i = 0; i < degree_; ++i) cur[i] = -minpoly_[i];
  for (std::size_t k = degree_; k + 1 < 2 * degree_ || k == degree_; ++k) {
    reduction_.push_back(cur);
    std::vector<Rational> next(degree_);
    Rational top = cur[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (std::size_t i = 0; i < degree_; ++i) next[i] -= top * minpoly_[i];
    cur = std::move(next);
  }
}

const ExtField& ExtField::rationals() {
  static const ExtField q("Q", "", {Rational(0), Rational(1)});
  return q;
}

const ExtField& ExtField::eisenstein() {
  static const ExtField f("Qw", "w", {Rational(1), Rational(1), Rational(1)});
  return f;
}

const ExtField& ExtField::septic() {
  static const ExtField f("Qc7", "c7",
                          {Rational(-1, 14112), 0, 0, 0, 0, 0, 0, Rational(1)});
  return f;
}

const ExtField& ExtField::by_name(std::string_view name) {
  if (name == "Q") return rationals();
  if (name == "Qw") return eisenstein();
  if (name == "Qc7") return septic();
  throw AlgebraError("unknown field: " + std::string(name));
}

const ExtField& common_field(const ExtField& a, const ExtField& b) {
  if (&a == &b) return a;
  if (a.degree() == 1) return b;
  if (b.degree() == 1) return a;
  throw AlgebraError("field mismatch: " + a.name() + " vs " + b.name());
}

FieldElem::FieldElem(const ExtField& field) : field_(&field), coords_(field.degree()) {}

FieldElem::FieldElem(const ExtField& field, const Rational& value) : field_(&field), coords_(field.degree()) {
  coords_[0] = value;
}

FieldElem::FieldElem(const ExtField& field, Coords coords) : field_(&field), coords_(std::move(coords)) {
  if (coords_.size() != field.degree()) throw AlgebraError("coordinate count does not match field degree");
}

FieldElem FieldElem::generator(const ExtField& field) {
  FieldElem g(field);
  if (field.degree() == 1) throw AlgebraError("Q has no generator");
  g.coords_[1] = 1;
  return g;
}

bool FieldElem::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool FieldElem::is_one() const { return coords_[0] == 1 && is_rational(); }

bool FieldElem::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return false;
  return true;
}

const Rational& FieldElem::rational() const {
  if (!is_rational()) throw AlgebraError("element is not rational: " + str());
  return coords_[0];
}

void FieldElem::unify(const FieldElem& o) {
  if (field_ == o.field_) return;
  const ExtField& f = common_field(*field_, *o.field_);
  if (field_ != &f) {
    Rational v = coords_[0];
    coords_.assign(f.degree(), Rational(0));
    coords_[0] = v;
    field_ = &f;
  }
}

FieldElem FieldElem::in(const ExtField& field) const {
  if (field_ == &field) return *this;
  if (!is_rational()) throw AlgebraError("cannot move element of " + field_->name() + " into " + field.name());
  return FieldElem(field, coords_[0]);
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (field_ != o.field_) {
    unify(o);
    if (o.field_ != field_) {
      coords_[0] += o.coords_[0];
      return *this;
    }
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  if (field_ != o.field_) {
    unify(o);
    if (o.field_ != field_) {
      coords_[0] -= o.coords_[0];
      return *this;
    }
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

void FieldElem::add_mul(const FieldElem& a, const FieldElem& b) {
  if (field_->degree() == 1 && a.field_->degree() == 1 && b.field_->degree() == 1) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.coords_[0].get_mpq_t(), b.coords_[0].get_mpq_t());
    coords_[0] += t;
    return;
  }
  *this += a * b;
}

FieldElem FieldElem::operator-() const {
  FieldElem r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (o.field_->degree() == 1) {
    for (auto& c : coords_) c *= o.coords_[0];
    return *this;
  }
  if (field_->degree() == 1) {
    Rational s = coords_[0];
    *this = o;
    for (auto& c : coords_) c *= s;
    return *this;
  }
  if (field_ != o.field_) throw AlgebraError("field mismatch in product");
  const std::size_t n = field_->degree();
  std::vector<Rational> prod(2 * n - 1);
  bool any_high = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(o.coords_[j]) == 0) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
      if (i + j >= n) any_high = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) coords_[i] = prod[i];
  if (any_high) {
    for (std::size_t k = n; k < 2 * n - 1; ++k) {
      if (sgn(prod[k]) == 0) continue;
      const auto& red = field_->power_reduction(k);
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(red[i]) != 0) coords_[i] += prod[k] * red[i];
    }
  }
  return *this;
}

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Returns (q, r) with a = q*b + r.
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  trim(a);
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return {q, a};
}

Dense sub_mul(const Dense& a, const Dense& q, const Dense& b) {
  Dense r(std::max(a.size(), q.size() + b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  trim(r);
  return r;
}

}  // namespace

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  const std::size_t n = field_->degree();
  if (n == 1) return FieldElem(*field_, Rational(1) / coords_[0]);
  // Extended Euclid: s*a + t*m = 1.
  Dense r0(field_->minimal_polynomial().begin(), field_->minimal_polynomial().end());
  Dense r1(coords_.begin(), coords_.end());
  trim(r1);
  Dense s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = divmod(r0, r1);
    Dense s = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  FieldElem out(*field_);
  for (std::size_t i = 0; i < s1.size() && i < n; ++i) out.coords_[i] = s1[i] / r1[0];
  return out;
}

FieldElem FieldElem::pow(unsigned long n) const {
  FieldElem result(*field_, Rational(1));
  FieldElem base(*this);
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.field_ == b.field_) return a.coords_ == b.coords_;
  if (a.field_->degree() == 1) return b.is_rational() && b.coords_[0] == a.coords_[0];
  if (b.field_->degree() == 1) return a.is_rational() && a.coords_[0] == b.coords_[0];
  return false;
}

std::size_t FieldElem::hash() const {
  std::size_t h = 0;
  for (const auto& c : coords_) {
    std::size_t v = std::hash<long>()(mpz_get_si(c.get_num_mpz_t())) * 31 + mpz_get_si(c.get_den_mpz_t());
    h = h * 1000003u ^ v;
  }
  return h;
}

std::string FieldElem::str() const {
  if (field_->degree() == 1) return to_string(coords_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << field_->generator();
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace e7
