#pragma once

#include "e7/mpoly.hpp"
#include "e7/polymatrix.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

namespace e7 {

// (s3, t1, t2, t3, t4, t5, t7)
RingPtr param_ring();
std::vector<Rational> param_weights();

// Undetermined-coefficient ansatz; everything lives in one ring
// (x, y, z, a1..a7, b1..b9, c1..c13, s3, t1..t5, t7).
struct AnsatzState {
  RingPtr ring;
  MPoly A0, A1, A2;
  MPoly M0, M1, N0, N1, N2, P0, P1, P2;
  MPoly g1, g2, g3;
  MPoly f;  // f~ including -z^2
};

AnsatzState make_ansatz();

// z-free H; both displayed forms are built and compared.
MPoly build_H(const AnsatzState& s);

struct Elimination {
  MPoly K0, K1;     // after the c-elimination
  MPoly L0, L1;     // after the b-elimination
  MPoly b_det;      // determinant of the 9x9 b-system
  std::vector<MPoly> c_solution;  // c1..c13 as linear forms in a, b
};

Elimination eliminate_c_then_b(const AnsatzState& s, const MPoly& H);

// 7x7 matrix over param_ring() with H = sum a_i (sum_j A_ij x^j + sum_k A_{i,k+4} x^{k-1} y).
PolyMatrix matrix_A(const AnsatzState& s, const Elimination& e);

// The fixture matrix B (factor included) over param_ring().
PolyMatrix matrix_B_fixture();
// The entry (4,4) as displayed, for the record.
MPoly matrix_B_printed_44();
// Displayed coefficients of t7^7, t7^6, t7^5, t7^4 in det(B) / ((7/9)^7 t7).
std::array<MPoly, 4> det_B_display();

struct DiscriminantBundle {
  PolyMatrix A;
  MPoly det_A;
  Rational k0;
  MPoly delta_tilde;
  MPoly delta_st34;
};

// Steps after matrix_A: determinant, normalization, delta_ST34.
DiscriminantBundle finish_discriminant(PolyMatrix A);
// Full pipeline, computed once per process.
const DiscriminantBundle& discriminant();

// delta~(s3, 0, 0, 0, 0, t5, t7)
MPoly delta_tilde_0(const MPoly& delta_tilde);

// Remainders modulo delta~_0 of f~_0, its x, y and z partials at
// (M1/N1, M2/N2, 0) after clearing denominators.
std::array<MPoly, 4> uv_remainders(const MPoly& delta0);

struct UvPoint {
  Rational s3, t5, t7;
  Rational u, v;
};
// A rational point on delta~_0 = 0, constructed from a random singular
// point (u, v) of f~_0, with t7 recovered by rational_roots.
UvPoint random_uv_point(std::mt19937& rng, const MPoly& delta0);
// (M1/N1, M2/N2) at the point; nullopt if a denominator vanishes.
std::optional<std::pair<Rational, Rational>> uv_formula(const Rational& s3, const Rational& t5, const Rational& t7);

// Row weights of A consistent with wt(x) = 2, wt(y) = 3: for each row i,
// wt(A_ij) + 2j and wt(A_{i,k+4}) + 2(k-1) + 3 agree over nonzero entries.
bool audit_row_weights(const PolyMatrix& A);

// det(A) at n random rational points against k0 t7 delta~.
bool audit_det(const DiscriminantBundle& b, int n, unsigned seed);

// Determinant of a constant matrix by Gaussian elimination over Q.
Rational rational_det(std::vector<std::vector<Rational>> m);

class ClaimViolation : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace e7
