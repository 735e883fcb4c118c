#pragma once

#include "e7/mpoly.hpp"

#include <optional>
#include <vector>

namespace e7 {

class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Grlex };

  MonomialOrder(Kind kind, std::vector<std::size_t> perm) : kind_(kind), perm_(std::move(perm)) {}
  // Identity variable permutation.
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grlex(std::size_t nvars);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  Kind kind_;
  std::vector<std::size_t> perm_;
};

class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<MPoly> gens, MonomialOrder order, std::size_t fingerprint);

  const std::vector<MPoly>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t fingerprint() const { return fingerprint_; }
  // Leading monomials with respect to order(), parallel to generators().
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  bool is_unit() const;

 private:
  std::vector<MPoly> gens_;
  MonomialOrder order_;
  std::size_t fingerprint_;
  std::vector<Monomial> leads_;
};

Monomial leading_monomial(const MPoly& p, const MonomialOrder& order);

GroebnerBasis buchberger(const std::vector<MPoly>& gens, const MonomialOrder& order);
// Full reduction of p modulo the basis.
MPoly normal_form(const MPoly& p, const GroebnerBasis& gb);
MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& order);

// Number of standard monomials; nullopt when the ideal is not zero-dimensional.
std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb);
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

// dim of the local algebra at the origin via d_N = dim R/(I + m^N),
// stopping at the first N with d_N = d_{N+1}. nullopt if N exceeds max_n.
std::optional<std::size_t> local_multiplicity_at_origin(const std::vector<MPoly>& gens, unsigned max_n = 64);
// The same at an arbitrary point (coordinates in the coefficient field).
std::optional<std::size_t> local_multiplicity_at(const std::vector<MPoly>& gens, const std::vector<FieldElem>& point,
                                                 unsigned max_n = 64);

// Translation x -> x + point.
MPoly translate(const MPoly& p, const std::vector<FieldElem>& point);

}  // namespace e7
