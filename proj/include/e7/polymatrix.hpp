#pragma once

#include "e7/mpoly.hpp"

#include <vector>

namespace e7 {

class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(RingPtr ring, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }
  MPoly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const MPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const;
  bool is_zero() const;
  // Applies f to every entry.
  template <class F>
  PolyMatrix map(F&& f) const {
    PolyMatrix r(ring_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = f(a_[k]);
    return r;
  }
  PolyMatrix map_to(const RingPtr& target) const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<MPoly> a_;
};

// Fraction-free Gaussian elimination; every division is exact.
MPoly bareiss_det(const PolyMatrix& m);
// Division-free Laplace expansion with memoised minors (2^n subsets);
// fast when entries are small and the determinant is large.
MPoly minor_expansion_det(const PolyMatrix& m);
// Plain cofactor expansion, only meant as a test oracle.
MPoly cofactor_det(const PolyMatrix& m);

struct LinearSolution {
  std::vector<MPoly> numerators;
  MPoly denominator;
};

// Cramer's rule: x_i = numerators[i] / denominator with denominator = det(m).
LinearSolution solve_linear(const PolyMatrix& m, const std::vector<MPoly>& rhs);

class SingularMatrix : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace e7
