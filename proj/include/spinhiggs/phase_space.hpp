#pragma once

// Constrained phase space T*(SO(2,C)\SL(2,C)) in Darboux coordinates
// (p0, p1, p3, q0, q1, q3), the collective spin map and the 2x2 matrix
// realization P = p0 + p1 s1 + p3 s3, Q = q0 + q1 s1 + q3 s3.
//
// The spin components are X1 = q0 p1 + q1 p0, X2 = q3 p1 - q1 p3,
// X3 = q0 p3 + q3 p0, and QP = X0 + X1 s1 + i X2 s2 + X3 s3. The opposite
// product PQ flips the sign of X2; det and traces of powers do not see it.

#include <array>
#include <string>

#include "spinhiggs/common.hpp"

namespace spinhiggs {

enum class RealityClass { ComplexV, TypeIII, TypeIV };

std::string to_string(RealityClass c);
RealityClass parse_reality_class(const std::string& s);  // "V", "III", "IV"

// Coordinate order shared by gradients and flattened states.
enum Coord : int { kP0 = 0, kP1, kP3, kQ0, kQ1, kQ3 };
using Vec6 = Eigen::Matrix<cplx, 6, 1>;

struct PhasePoint {
  cplx p0, p1, p3, q0, q1, q3;
  RealityClass cls = RealityClass::ComplexV;

  Vec6 coords() const;
  static PhasePoint from_coords(const Vec6& v, RealityClass cls);
};

struct SpinVector {
  cplx X1, X2, X3;

  cplx operator[](int alpha) const;  // alpha in {1, 2, 3}
  SpinVector operator+(const SpinVector& o) const { return {X1 + o.X1, X2 + o.X2, X3 + o.X3}; }
  SpinVector operator-(const SpinVector& o) const { return {X1 - o.X1, X2 - o.X2, X3 - o.X3}; }
  SpinVector operator*(cplx s) const { return {s * X1, s * X2, s * X3}; }
  cplx plus() const { return X1 + X2; }   // X_+
  cplx minus() const { return X1 - X2; }  // X_-
};

double max_abs(const SpinVector& x);

struct Constraints {
  cplx c1;
  cplx c2;
};

Constraints constraints(const PhasePoint& pt);
double constraint_violation(const PhasePoint& pt);  // max(|c1|, |c2|)

inline constexpr double kProjectBasin = 1e-1;
inline constexpr int kProjectMaxIter = 50;

// Newton projection onto c1 = c2 = 0. q moves along conj(grad_q c1), then p
// along conj(q); both steps keep the TypeIII and TypeIV coordinate patterns.
// The tolerance is raised to the rounding level of the constraints when |q|
// or |p| is large.
PhasePoint project_onshell(const PhasePoint& pt, double tol = 1e-12,
                           double basin = kProjectBasin);

SpinVector collective_spin(const PhasePoint& pt);
cplx collective_x0(const PhasePoint& pt);  // equals c2

cplx casimir(const SpinVector& x);  // X1^2 - X2^2 + X3^2

// (A, B) = A1 B1 - A2 B2 + A3 B3 = (1/2) tr of the product of spin matrices.
cplx pairing(const SpinVector& a, const SpinVector& b);

// Pauli matrices sigma_0..sigma_3.
const Mat2& pauli(int a);

// X1 s1 + i X2 s2 + X3 s3 = [[X3, X1 + X2], [X1 - X2, -X3]].
Mat2 spin_matrix(const SpinVector& x);
// Inverse of spin_matrix on the traceless part.
SpinVector spin_from_matrix(const Mat2& m);
// Coefficients of s1, s2, s3 in spin_matrix: (X1, i X2, X3).
std::array<cplx, 3> pauli_coefficients(const SpinVector& x);

Mat2 p_matrix(const PhasePoint& pt);
Mat2 q_matrix(const PhasePoint& pt);
// Inverse of p_matrix/q_matrix for symmetric matrices; the class is attached.
PhasePoint from_matrices(const Mat2& P, const Mat2& Q, RealityClass cls);

struct MatrixPair {
  Mat2 P;
  Mat2 Q;
  Mat2 X;
};

// P = g^-1 zeta (g^T)^-1, Q = g^T g, X = P Q = g^-1 zeta g.
MatrixPair pq_decompose(const Mat2& g, const Mat2& zeta);

// S = g^-1 diag(nu, -nu) g.
Mat2 coadjoint_moment(cplx nu, const Mat2& g);

// Max deviation of the coordinates from the class's reality pattern.
double reality_residual(const PhasePoint& pt);
// Same check on the Pauli coefficients (X1, i X2, X3): all imaginary for
// TypeIII; X1, X3 real and i X2 imaginary for TypeIV.
double spin_reality_residual(const SpinVector& x, RealityClass cls);

// Antiholomorphic involution fixing the TypeIII (resp. TypeIV) locus:
// TypeIII maps (c0, c1, c3) -> (conj c0, -conj c1, -conj c3) in p and q;
// TypeIV is plain conjugation. Under it spin_matrix goes to -X^dagger
// (TypeIII) or conj(X) (TypeIV).
PhasePoint reality_involution(const PhasePoint& pt, RealityClass cls);

}  // namespace spinhiggs
