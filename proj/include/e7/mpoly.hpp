#pragma once

#include "e7/field.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace e7 {

inline constexpr std::size_t kMaxVars = 40;

// Dense exponent vector; the slot count must match the ring it is used in.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::span<const unsigned> exps);

  std::size_t size() const { return n_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned degree() const { return deg_; }
  void set(std::size_t i, unsigned e);
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  // Requires divides(o).
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_ || a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint32_t deg_ = 0;
};

// Graded reverse lexicographic comparison (x1 > x2 > ... ).
bool grevlex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class Ring {
 public:
  Ring(std::vector<std::string> vars, const ExtField& field);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(std::size_t i) const { return vars_[i]; }
  const ExtField& field() const { return *field_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws for unknown names.
  std::size_t index(std::string_view name) const;

  bool same_as(const Ring& o) const { return this == &o || (field_ == o.field_ && vars_ == o.vars_); }

 private:
  std::vector<std::string> vars_;
  const ExtField* field_;
};

using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(std::vector<std::string> vars, const ExtField& field = ExtField::rationals());
// Comma separated variable list, e.g. "x,y,z".
RingPtr make_ring(std::string_view vars, const ExtField& field = ExtField::rationals());

struct Term {
  Monomial mono;
  FieldElem coeff;
};

// Accumulates coefficients by monomial; used to assemble products and sums.
class TermAccumulator {
 public:
  void add(const Monomial& m, const FieldElem& c);
  void add_product(const Monomial& m, const FieldElem& c1, const FieldElem& c2);
  std::vector<Term> take_sorted();
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<Monomial, FieldElem, MonomialHash> map_;
};

// Weighted degree query result: a common degree or nothing (inhomogeneous).
using WeightedDegree = std::optional<Rational>;

// Sparse multivariate polynomial; terms are stored in descending grevlex
// order with no zero coefficients.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}
  MPoly(RingPtr ring, const FieldElem& constant);
  MPoly(RingPtr ring, std::vector<Term> terms, bool sorted_and_clean = false);

  static MPoly variable(RingPtr ring, std::size_t index);
  static MPoly variable(RingPtr ring, std::string_view name);
  static MPoly monomial(RingPtr ring, const Monomial& m, const FieldElem& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  // Constant coefficient (zero if absent).
  FieldElem constant_term() const;
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const;
  unsigned degree(std::size_t var) const;
  // Coefficient of var^k, as a polynomial in the same ring (var absent).
  MPoly coefficient(std::size_t var, unsigned k) const;
  // Coefficient of an exact monomial.
  FieldElem coefficient(const Monomial& m) const;
  // Coefficients c_0..c_deg with respect to `var`.
  std::vector<MPoly> coefficients_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree(var) > 0; }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const FieldElem& c);
  MPoly operator-() const;
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const FieldElem& c) { return a *= c; }
  friend MPoly operator*(const FieldElem& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned n) const;
  MPoly derivative(std::size_t var) const;
  MPoly derivative(std::string_view var) const { return derivative(ring_->index(var)); }
  // Multiplies by a monomial.
  MPoly shifted(const Monomial& m) const;

  // Exact evaluation at a full point.
  FieldElem evaluate(std::span<const FieldElem> point) const;
  // Replaces the listed variables by constants; the ring is kept.
  MPoly specialize(const std::vector<std::pair<std::size_t, FieldElem>>& values) const;
  MPoly specialize(const std::vector<std::pair<std::string, FieldElem>>& values) const;

  // Maps into `target` by variable name. Variables missing from `target`
  // must not occur.
  MPoly to_ring(const RingPtr& target) const;

  // Makes the leading coefficient one.
  MPoly monic() const;

  std::size_t hash() const;
  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
  void check_ring(const MPoly& o) const;
  friend class TermAccumulator;
};

// Ring homomorphism: each variable of p's ring is replaced by the given
// polynomial in `target`; variables without an assignment map by name.
MPoly substitute(const MPoly& p, const std::vector<std::optional<MPoly>>& images, const RingPtr& target);
MPoly substitute(const MPoly& p, const std::map<std::string, MPoly>& images, const RingPtr& target);

// Common weighted degree under the given weights, or nullopt when the
// terms disagree. The zero polynomial reports nullopt as well.
WeightedDegree weighted_degree(const MPoly& p, std::span<const Rational> weights);

// Exact quotient p/q. Throws InexactDivision when q does not divide p.
MPoly exact_divide(const MPoly& p, const MPoly& q);
// Quotient when q divides p, nullopt otherwise.
std::optional<MPoly> try_divide(const MPoly& p, const MPoly& q);

// Remainder of p modulo m, where m is monic in `var` (coefficients in the
// other variables): the unique r with deg_var r < deg_var m and m | p - r.
MPoly remainder_monic(const MPoly& p, const MPoly& m, std::size_t var);

class InexactDivision : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class RingMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace e7
