#pragma once

#include "e7/mpoly.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace e7 {

// z^2 = w with w = x6 - v(x1..x5), over the ring (x1..x7).
struct AlgContext {
  RingPtr ring;
  MPoly v, w;
  std::array<MPoly, 7> dw;  // d w / d x_j
  std::array<Rational, 7> weights;
};
using AlgContextPtr = std::shared_ptr<const AlgContext>;

AlgContextPtr make_alg_context(const MPoly& v, const std::array<Rational, 7>& weights);

// (p + q z) / w^k, kept in lowest terms.
class AlgElem {
 public:
  AlgElem() = default;
  AlgElem(AlgContextPtr ctx, MPoly p, MPoly q = MPoly(), unsigned k = 0);
  static AlgElem z(AlgContextPtr ctx);

  const MPoly& p() const { return p_; }
  const MPoly& q() const { return q_; }
  unsigned k() const { return k_; }
  const AlgContextPtr& context() const { return ctx_; }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem operator-() const;
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator*(AlgElem a, const FieldElem& c);
  friend bool operator==(const AlgElem& a, const AlgElem& b);
  friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }

  // d / d x_j, j = 0..6.
  AlgElem partial(std::size_t j) const;
  AlgElem euler() const;

  // Numerator after x6 -> v + z^2 in laurent_ring(), with this = N / z^shift.
  std::pair<MPoly, unsigned> eliminate_x6() const;

  // Value with z taken as the given square root of w at the point (coordinates x1..x7).
  FieldElem evaluate(std::span<const FieldElem> x, const FieldElem& zval) const;

  std::string str() const;

 private:
  void normalize();
  void lift(unsigned k);
  AlgContextPtr ctx_;
  MPoly p_, q_;
  unsigned k_ = 0;
};

// (x1, x2, x3, x4, x5, x7, z)
RingPtr laurent_ring();

using AlgMatrix = std::vector<std::vector<AlgElem>>;

struct PotentialE7 {
  AlgContextPtr ctx;
  MPoly F_poly;    // everything except the z^5 term
  AlgElem F_alg;   // alg_coeff * w^2 z
  AlgElem F;
};
const PotentialE7& potential();

struct FrobMatrices {
  AlgMatrix C;
  std::array<AlgMatrix, 7> B;  // B~_1..B~_7
  AlgMatrix T;
};
// C_ij = d^2 F / dx_i dx_{8-j}, B~_j = d_j C, T = entrywise E C.
FrobMatrices frob_matrices(const PotentialE7& f, unsigned threads = 1);

struct CommutatorFailure {
  int j, k;
  std::size_t row, col;
};
std::vector<CommutatorFailure> check_commutators(const FrobMatrices& m, unsigned threads = 1);
AlgMatrix alg_matmul(const AlgMatrix& a, const AlgMatrix& b);

// det(T) in laurent_ring(); throws if a power of z remains in the denominator.
MPoly det_T(const FrobMatrices& m);

// Transform images of x1..x5, x7, z over Q(c7), ring (s3, t1, ..., t5, t7).
std::array<MPoly, 7> wdvv_transform();

struct TransformResult {
  FieldElem kappa;
  bool matches = false;   // det T o transform == kappa * delta~
  MPoly transformed;      // over Q
};
// Uses weighted homogeneity: with x_j = c7^(2j) phi_j and z = c7^6 psi, the
// substitution equals c7^98 det T(phi, psi), c7^98 = 14112^-14.
TransformResult transform_and_compare(const MPoly& detT, const MPoly& delta_tilde);

// kappa at n random rational (s3, tau) evaluated directly over Q(c7):
// T entries at the transformed point, det by elimination, divided by delta~.
std::vector<FieldElem> pointwise_kappa(const FrobMatrices& m, const MPoly& delta_tilde, int n, unsigned seed);

FieldElem field_det(std::vector<std::vector<FieldElem>> m);

}  // namespace e7
