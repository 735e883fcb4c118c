#include "e7/polymatrix.hpp"

#include <bit>

namespace e7 {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, MPoly(ring_)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MPoly(ring, FieldElem(ring->field(), Rational(1)));
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw AlgebraError("matrix product: shape mismatch");
  PolyMatrix r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const MPoly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw AlgebraError("matrix sum: shape mismatch");
  PolyMatrix r(*this);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw AlgebraError("matrix difference: shape mismatch");
  PolyMatrix r(*this);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::map_to(const RingPtr& target) const {
  PolyMatrix r(target, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].to_ring(target);
  return r;
}

MPoly bareiss_det(const PolyMatrix& m0) {
  if (m0.rows() != m0.cols()) throw AlgebraError("determinant of a non-square matrix");
  const std::size_t n = m0.rows();
  const RingPtr& ring = m0.ring();
  MPoly one(ring, FieldElem(ring->field(), Rational(1)));
  if (n == 0) return one;
  PolyMatrix m = m0;
  MPoly prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return MPoly(ring);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = prev.is_constant() ? v * prev.constant_term().inverse() : exact_divide(v, prev);
      }
      m(i, k) = MPoly(ring);
    }
    prev = m(k, k);
  }
  MPoly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

MPoly minor_expansion_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw AlgebraError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 20) throw AlgebraError("minor expansion limited to 20x20");
  const RingPtr& ring = m.ring();
  std::vector<MPoly> cur(std::size_t(1) << n);
  cur[0] = MPoly(ring, FieldElem(ring->field(), Rational(1)));
  std::vector<char> have(cur.size(), 0);
  have[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<MPoly> next(cur.size());
    std::vector<char> next_have(cur.size(), 0);
    for (std::uint32_t mask = 0; mask < cur.size(); ++mask) {
      if (std::popcount(mask) != int(k + 1)) continue;
      MPoly acc(ring);
      bool any = false;
      std::size_t idx = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(mask >> c & 1)) continue;
        std::uint32_t sub = mask & ~(std::uint32_t(1) << c);
        const MPoly& a = m(k, c);
        if (have[sub] && !a.is_zero() && !cur[sub].is_zero()) {
          MPoly prod = a * cur[sub];
          if ((k + idx) % 2) acc -= prod;
          else acc += prod;
          any = true;
        }
        ++idx;
      }
      if (any) {
        next[mask] = std::move(acc);
        next_have[mask] = 1;
      }
    }
    cur = std::move(next);
    have = std::move(next_have);
  }
  std::size_t full = (std::size_t(1) << n) - 1;
  return have[full] ? cur[full] : MPoly(ring);
}

MPoly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  const RingPtr& ring = m.ring();
  if (n == 0) return MPoly(ring, FieldElem(ring->field(), Rational(1)));
  if (n == 1) return m(0, 0);
  MPoly acc(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    PolyMatrix minor(ring, n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = m(i, c);
    MPoly t = m(0, j) * cofactor_det(minor);
    if (j % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

LinearSolution solve_linear(const PolyMatrix& m, const std::vector<MPoly>& rhs) {
  if (m.rows() != m.cols() || rhs.size() != m.rows()) throw AlgebraError("solve_linear: shape mismatch");
  LinearSolution sol;
  sol.denominator = minor_expansion_det(m);
  if (sol.denominator.is_zero()) throw SingularMatrix("solve_linear: singular matrix");
  for (std::size_t i = 0; i < m.cols(); ++i) {
    PolyMatrix mi = m;
    for (std::size_t r = 0; r < m.rows(); ++r) mi(r, i) = rhs[r];
    sol.numerators.push_back(minor_expansion_det(mi));
  }
  return sol;
}

}  // namespace e7
