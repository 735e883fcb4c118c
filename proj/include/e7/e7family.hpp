#pragma once

#include "e7/mpoly.hpp"
#include "e7/parse.hpp"
#include "e7/singclass.hpp"

#include <array>
#include <string>
#include <vector>

namespace e7 {

// Fixture directory; E7M_DATA overrides the compiled-in default.
std::string data_dir();
const DataFile& data_file(const std::string& name);

using Vec8 = std::array<Rational, 8>;

Rational dot(const Vec8& a, const Vec8& b);
Vec8 operator+(const Vec8& a, const Vec8& b);
Vec8 operator-(const Vec8& a, const Vec8& b);
Vec8 operator*(const Rational& s, const Vec8& a);
// Reflection of v in the hyperplane orthogonal to the root r (|r|^2 = 2).
Vec8 reflect(const Vec8& v, const Vec8& r);

struct RootSystemE7 {
  std::vector<Vec8> roots;
  std::array<Vec8, 7> simple_roots;
  std::array<Vec8, 7> fundamental_weights;
};

const RootSystemE7& e7_roots();

// Lambda_1..Lambda_7, Lambda_jk (j < k) and their negatives.
const std::vector<Vec8>& weights56();

// Psi_v(X) = prod over the 28 positive weights of (X^2 - <Lambda, v>^2), in ring (X).
MPoly psi_poly(const Vec8& v);

// eps_1..eps_28: elementary symmetric functions of the 28 squares.
std::vector<Rational> epsilons(const Vec8& v);

// Parameter tuples with polynomial entries over a shared ring.
struct LambdaParams {
  static constexpr const char* names[7] = {"p0", "p1", "q0", "q1", "q2", "q3", "q4"};
  std::array<MPoly, 7> v;
  const MPoly& operator[](std::size_t i) const { return v[i]; }
  friend bool operator==(const LambdaParams&, const LambdaParams&) = default;
};

struct FamilyParams {
  static constexpr const char* names[7] = {"s3", "t1", "t2", "t3", "t4", "t5", "t7"};
  std::array<MPoly, 7> v;
  const MPoly& operator[](std::size_t i) const { return v[i]; }
  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

LambdaParams constant_lambda(const std::array<Rational, 7>& values, const RingPtr& ring);
FamilyParams constant_family(const std::array<FieldElem, 7>& values, const RingPtr& ring);
// Constant entries as field elements; throws if an entry is not constant.
std::array<FieldElem, 7> values_of(const std::array<MPoly, 7>& v);

// eps holds eps_1..eps_9 (eps_2 and eps_8 are unused).
LambdaParams pq_from_eps(const std::vector<MPoly>& eps);
LambdaParams pq_from_eps(const std::vector<Rational>& eps);

LambdaParams st_to_pq(const FamilyParams& p);

struct PqToSt {
  MPoly eliminant;  // in ring (t2)
  std::vector<std::array<Rational, 7>> solutions;
};
PqToSt pq_to_st(const std::array<Rational, 7>& lambda);

class DegenerateSpecialization : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Monic even degree 56 polynomial in ring (X) obtained from the resultant
// of R1(d), R2(d).
MPoly shioda_phi(const std::array<Rational, 7>& lambda);

// Case tables. eta / m are the single variable of the returned ring.
RingPtr eta_ring(const ExtField& field = ExtField::rationals());
LambdaParams lambda_case(int i, const MPoly& eta);
std::array<Rational, 7> lambda_case(int i, const Rational& eta);
// eta as a polynomial in xi: 4/3 xi^2, 8 xi^2, ...
MPoly eta_of_xi(int i);
// Displayed case vector in e1..e8, as a polynomial in xi per coordinate.
std::array<MPoly, 8> case_vector(int i);
// k with k * varpi_i reproducing Psi of case i at xi = 1.
Vec8 case_weight_vector(int i);
std::vector<FamilyParams> solution_table(int i, const MPoly& eta);

struct TableGerm {
  std::array<MPoly, 2> point;
  SingularityType type;
};
std::vector<TableGerm> case_germs(int i, const RingPtr& eta);

FamilyParams st34_tau(int i, const MPoly& eta);
std::vector<TableGerm> st34_germs(int i, const RingPtr& eta);
// Coefficient field of tau[i] (Qw for i = 4).
const ExtField& st34_field(int i);
std::array<MPoly, 6> st34_x(int i, const RingPtr& m);
std::array<MPoly, 6> st34_sums(int i, const RingPtr& m);
MPoly st34_eta_of_m(int i, const RingPtr& m);

// t1, t2, t3, t4, t5, t7 from m1, m2, m3, m4, m5, m7.
std::array<MPoly, 6> st34_t_from_m(const std::array<MPoly, 6>& m);

// (p3, p6, p9, p12, p15, q6).
std::array<MPoly, 6> power_sums(const std::array<MPoly, 6>& x);

// Ring (x, y, z, params...) for polynomials in params.
RingPtr xyz_ring(const RingPtr& params);
MPoly f_e7(const LambdaParams& l, const RingPtr& target);
MPoly f_tilde(const FamilyParams& p, const RingPtr& target);
// f~ restricted to s3 = 0 with tau given.
FamilyParams with_s3_zero(const std::array<MPoly, 6>& tau);

}  // namespace e7
