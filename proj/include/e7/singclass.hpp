#pragma once

#include "e7/mpoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace e7 {

enum class SingTag { A, D, E, Smooth, NonIsolated, NotSimple };

struct SingularityType {
  SingTag tag = SingTag::Smooth;
  unsigned index = 0;

  static SingularityType A(unsigned k);
  static SingularityType D(unsigned k);
  static SingularityType E(unsigned k);
  static SingularityType of(SingTag t) { return SingularityType{t, 0}; }
  // "A3", "D6", "E7", "Smooth", ...
  std::string str() const;
  // Inverse of str(); throws on malformed labels.
  static SingularityType parse(const std::string& label);
  friend bool operator==(const SingularityType&, const SingularityType&) = default;
};

struct GermReport {
  std::vector<FieldElem> point;  // (x, y, z)
  std::optional<std::size_t> milnor;
  SingularityType type;
  unsigned corank = 0;
};

struct SingularLocus {
  std::vector<std::vector<FieldElem>> points;  // (x, y)
  std::vector<std::size_t> tjurina;             // local Tjurina number per point
  std::size_t global_tjurina = 0;
  bool complete = false;
};

struct SurfaceReport {
  std::vector<GermReport> germs;
  std::size_t global_tjurina = 0;
  bool complete = false;
};

enum class CubicStructure { ThreeDistinct, OneDouble, Triple, Zero };
const char* to_string(CubicStructure c);

class NonIsolatedLocus : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class UnsupportedShape : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Distinct roots lying in the coefficient field of a univariate polynomial.
std::vector<FieldElem> field_roots(const MPoly& p, std::size_t var);
// All points with coordinates in the coefficient field of a zero-dimensional
// system; throws NonIsolatedLocus when some coordinate is not determined.
std::vector<std::vector<FieldElem>> solve_zero_dimensional(const std::vector<MPoly>& gens);

SingularLocus find_rational_singular_points(const MPoly& g);
GermReport classify_germ(const MPoly& g, const std::vector<FieldElem>& point);
// Coefficients of x^3, x^2 y, x y^2, y^3.
CubicStructure binary_cubic_root_structure(const std::array<FieldElem, 4>& c);

struct Suspension {
  MPoly g;              // in a two-variable ring
  std::size_t z_index;  // index of the squared variable in the input ring
};
// Splits f = g(x, y) + c z^2 with c a nonzero constant.
Suspension split_suspension(const MPoly& f);
SurfaceReport classify_surface(const MPoly& f);

}  // namespace e7
