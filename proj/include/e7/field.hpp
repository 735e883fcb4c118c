#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace e7 {

using Integer = mpz_class;
using Rational = mpq_class;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "n" or "n/d" (optional leading sign) into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// A simple algebraic extension Q[g]/(m(g)) with m monic and irreducible.
// Only three instances exist: Q, Q(w) with w^2+w+1 = 0, and Q(c7) with
// c7^7 = 1/14112.
class ExtField {
 public:
  ExtField(std::string name, std::string generator,
           std::vector<Rational> minimal_polynomial);

  const std::string& name() const { return name_; }
  const std::string& generator() const { return generator_; }
  std::size_t degree() const { return degree_; }
  // Coefficients low to high, monic, size degree()+1.
  const std::vector<Rational>& minimal_polynomial() const { return minpoly_; }
  // Coordinates of g^k for k in [degree, 2*degree-2] in the power basis.
  const std::vector<Rational>& power_reduction(std::size_t k) const {
    return reduction_[k - degree_];
  }

  static const ExtField& rationals();
  static const ExtField& eisenstein();
  static const ExtField& septic();
  // "Q", "Qw" or "Qc7".
  static const ExtField& by_name(std::string_view name);

 private:
  std::string name_;
  std::string generator_;
  std::vector<Rational> minpoly_;
  std::size_t degree_;
  std::vector<std::vector<Rational>> reduction_;
};

class FieldElem {
 public:
  using Coords = boost::container::small_vector<Rational, 1>;

  FieldElem() : FieldElem(ExtField::rationals()) {}
  explicit FieldElem(const ExtField& field);
  FieldElem(const ExtField& field, const Rational& value);
  FieldElem(const ExtField& field, Coords coords);
  // NOLINTNEXTLINE(google-explicit-constructor)
  FieldElem(const Rational& value) : FieldElem(ExtField::rationals(), value) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  FieldElem(long value) : FieldElem(ExtField::rationals(), Rational(value)) {}

  static FieldElem generator(const ExtField& field);

  const ExtField& field() const { return *field_; }
  const Coords& coords() const { return coords_; }
  const Rational& coord(std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  bool is_one() const;
  // True when every coordinate above the constant one vanishes.
  bool is_rational() const;
  // The constant coordinate; throws unless is_rational().
  const Rational& rational() const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }
  // this += a*b
  void add_mul(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(unsigned long n) const;

  // Moves an element into `field`; non-rational elements must already live there.
  FieldElem in(const ExtField& field) const;

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  std::size_t hash() const;
  // Human readable form, e.g. "3/2", "1 + 2*w", "-c7^3".
  std::string str() const;

 private:
  const ExtField* field_;
  Coords coords_;
  void unify(const FieldElem& o);
};

// The field both operands live in (Q promotes to the other one).
const ExtField& common_field(const ExtField& a, const ExtField& b);

}  // namespace e7
