#pragma once

#include "e7/mpoly.hpp"

#include <vector>

namespace e7 {

// Dense univariate polynomial over Q, coefficient i belongs to x^i.
using UPoly = std::vector<Rational>;

void trim(UPoly& p);
UPoly to_upoly(const MPoly& p, std::size_t var);
MPoly from_upoly(const UPoly& p, const RingPtr& ring, std::size_t var);

UPoly upoly_derivative(const UPoly& p);
Rational upoly_eval(const UPoly& p, const Rational& x);
// (q, r) with a = q*b + r.
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
// Monic gcd.
UPoly upoly_gcd(UPoly a, UPoly b);

struct RationalRoot {
  Rational value;
  unsigned multiplicity;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

// Rational roots with multiplicities, in increasing order.
std::vector<RationalRoot> rational_roots(const UPoly& p);
// p must involve at most one variable.
std::vector<RationalRoot> rational_roots(const MPoly& p);

// Determinant of the Sylvester matrix of p and q with respect to var.
MPoly resultant(const MPoly& p, const MPoly& q, std::size_t var);

}  // namespace e7
