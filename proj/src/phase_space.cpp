#include "spinhiggs/phase_space.hpp"

#include <cmath>
#include <limits>

namespace spinhiggs {

std::string to_string(RealityClass c) {
  switch (c) {
    case RealityClass::ComplexV: return "V";
    case RealityClass::TypeIII: return "III";
    case RealityClass::TypeIV: return "IV";
  }
  return "?";
}

RealityClass parse_reality_class(const std::string& s) {
  if (s == "V" || s == "ComplexV") return RealityClass::ComplexV;
  if (s == "III" || s == "TypeIII") return RealityClass::TypeIII;
  if (s == "IV" || s == "TypeIV") return RealityClass::TypeIV;
  throw ValidationError("unknown reality class '" + s + "' (expected V, III or IV)");
}

Vec6 PhasePoint::coords() const {
  Vec6 v;
  v << p0, p1, p3, q0, q1, q3;
  return v;
}

PhasePoint PhasePoint::from_coords(const Vec6& v, RealityClass cls) {
  return PhasePoint{v[kP0], v[kP1], v[kP3], v[kQ0], v[kQ1], v[kQ3], cls};
}

cplx SpinVector::operator[](int alpha) const {
  switch (alpha) {
    case 1: return X1;
    case 2: return X2;
    case 3: return X3;
    default: break;
  }
  throw IndexError("spin index must be 1, 2 or 3, got " + std::to_string(alpha));
}

double max_abs(const SpinVector& x) {
  return std::max({std::abs(x.X1), std::abs(x.X2), std::abs(x.X3)});
}

Constraints constraints(const PhasePoint& pt) {
  return {pt.q0 * pt.q0 - pt.q1 * pt.q1 - pt.q3 * pt.q3 - 1.0,
          pt.q0 * pt.p0 + pt.q1 * pt.p1 + pt.q3 * pt.p3};
}

double constraint_violation(const PhasePoint& pt) {
  const Constraints c = constraints(pt);
  return std::max(std::abs(c.c1), std::abs(c.c2));
}

PhasePoint project_onshell(const PhasePoint& pt, double tol, double basin) {
  const double qnorm2 = std::norm(pt.q0) + std::norm(pt.q1) + std::norm(pt.q3);
  if (qnorm2 < 1e-28) throw DegenerateError("project_onshell: q is zero");
  const double pnorm2 = std::norm(pt.p0) + std::norm(pt.p1) + std::norm(pt.p3);
  // constraints cannot be resolved below their own rounding error
  tol = std::max(tol, 16.0 * std::numeric_limits<double>::epsilon() *
                          std::max(qnorm2, std::sqrt(qnorm2 * pnorm2)));
  const double v0 = constraint_violation(pt);
  if (v0 <= tol) return pt;
  if (v0 > basin) {
    throw OffShellError("project_onshell: constraint violation " + std::to_string(v0) +
                        " exceeds the basin " + std::to_string(basin));
  }

  PhasePoint x = pt;
  for (int it = 0; it < kProjectMaxIter; ++it) {
    const cplx c1 = constraints(x).c1;
    const cplx g0 = 2.0 * x.q0, g1 = -2.0 * x.q1, g3 = -2.0 * x.q3;
    const double gg = std::norm(g0) + std::norm(g1) + std::norm(g3);
    if (gg < 1e-28) throw DegenerateError("project_onshell: vanishing c1 gradient");
    const cplx s = c1 / gg;
    x.q0 -= s * std::conj(g0);
    x.q1 -= s * std::conj(g1);
    x.q3 -= s * std::conj(g3);

    const cplx c2 = constraints(x).c2;
    const double qq = std::norm(x.q0) + std::norm(x.q1) + std::norm(x.q3);
    if (qq < 1e-28) throw DegenerateError("project_onshell: q collapsed to zero");
    const cplx t = c2 / qq;
    x.p0 -= t * std::conj(x.q0);
    x.p1 -= t * std::conj(x.q1);
    x.p3 -= t * std::conj(x.q3);

    if (constraint_violation(x) <= tol) return x;
  }
  throw ConvergenceError("project_onshell: no convergence after " +
                         std::to_string(kProjectMaxIter) + " iterations");
}

SpinVector collective_spin(const PhasePoint& pt) {
  return {pt.q0 * pt.p1 + pt.q1 * pt.p0, pt.q3 * pt.p1 - pt.q1 * pt.p3,
          pt.q0 * pt.p3 + pt.q3 * pt.p0};
}

cplx collective_x0(const PhasePoint& pt) { return pt.q0 * pt.p0 + pt.q1 * pt.p1 + pt.q3 * pt.p3; }

cplx casimir(const SpinVector& x) { return x.X1 * x.X1 - x.X2 * x.X2 + x.X3 * x.X3; }

cplx pairing(const SpinVector& a, const SpinVector& b) {
  return a.X1 * b.X1 - a.X2 * b.X2 + a.X3 * b.X3;
}

const Mat2& pauli(int a) {
  static const std::array<Mat2, 4> s = [] {
    std::array<Mat2, 4> m;
    m[0] << 1.0, 0.0, 0.0, 1.0;
    m[1] << 0.0, 1.0, 1.0, 0.0;
    m[2] << 0.0, -kI, kI, 0.0;
    m[3] << 1.0, 0.0, 0.0, -1.0;
    return m;
  }();
  if (a < 0 || a > 3) throw IndexError("Pauli index must be 0..3");
  return s[a];
}

Mat2 spin_matrix(const SpinVector& x) {
  Mat2 m;
  m << x.X3, x.X1 + x.X2, x.X1 - x.X2, -x.X3;
  return m;
}

SpinVector spin_from_matrix(const Mat2& m) {
  return {0.5 * (m(0, 1) + m(1, 0)), 0.5 * (m(0, 1) - m(1, 0)), 0.5 * (m(0, 0) - m(1, 1))};
}

std::array<cplx, 3> pauli_coefficients(const SpinVector& x) { return {x.X1, kI * x.X2, x.X3}; }

Mat2 p_matrix(const PhasePoint& pt) {
  Mat2 m;
  m << pt.p0 + pt.p3, pt.p1, pt.p1, pt.p0 - pt.p3;
  return m;
}

Mat2 q_matrix(const PhasePoint& pt) {
  Mat2 m;
  m << pt.q0 + pt.q3, pt.q1, pt.q1, pt.q0 - pt.q3;
  return m;
}

PhasePoint from_matrices(const Mat2& P, const Mat2& Q, RealityClass cls) {
  PhasePoint pt;
  pt.p0 = 0.5 * (P(0, 0) + P(1, 1));
  pt.p3 = 0.5 * (P(0, 0) - P(1, 1));
  pt.p1 = 0.5 * (P(0, 1) + P(1, 0));
  pt.q0 = 0.5 * (Q(0, 0) + Q(1, 1));
  pt.q3 = 0.5 * (Q(0, 0) - Q(1, 1));
  pt.q1 = 0.5 * (Q(0, 1) + Q(1, 0));
  pt.cls = cls;
  return pt;
}

namespace {

Mat2 checked_inverse(const Mat2& g, const char* who) {
  const cplx det = g.determinant();
  const double scale = g.cwiseAbs().maxCoeff();
  if (scale == 0.0 || std::abs(det) < 1e-14 * scale * scale) {
    throw SingularError(std::string(who) + ": singular matrix");
  }
  Mat2 inv;
  inv << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
  return inv / det;
}

}  // namespace

MatrixPair pq_decompose(const Mat2& g, const Mat2& zeta) {
  const double zs = std::max(zeta.cwiseAbs().maxCoeff(), 1.0);
  if (std::abs(zeta(0, 1) - zeta(1, 0)) > 1e-12 * zs || std::abs(zeta.trace()) > 1e-12 * zs) {
    throw ValidationError("pq_decompose: zeta must be symmetric and traceless");
  }
  const Mat2 gi = checked_inverse(g, "pq_decompose");
  MatrixPair out;
  out.P = gi * zeta * gi.transpose();
  out.Q = g.transpose() * g;
  out.X = out.P * out.Q;
  return out;
}

Mat2 coadjoint_moment(cplx nu, const Mat2& g) {
  const Mat2 gi = checked_inverse(g, "coadjoint_moment");
  Mat2 d = Mat2::Zero();
  d(0, 0) = nu;
  d(1, 1) = -nu;
  return gi * d * g;
}

double reality_residual(const PhasePoint& pt) {
  switch (pt.cls) {
    case RealityClass::ComplexV: return 0.0;
    case RealityClass::TypeIII:
      return std::max({std::abs(pt.p0.imag()), std::abs(pt.q0.imag()), std::abs(pt.p1.real()),
                       std::abs(pt.q1.real()), std::abs(pt.p3.real()), std::abs(pt.q3.real())});
    case RealityClass::TypeIV:
      return std::max({std::abs(pt.p0.imag()), std::abs(pt.q0.imag()), std::abs(pt.p1.imag()),
                       std::abs(pt.q1.imag()), std::abs(pt.p3.imag()), std::abs(pt.q3.imag())});
  }
  return 0.0;
}

double spin_reality_residual(const SpinVector& x, RealityClass cls) {
  const auto c = pauli_coefficients(x);
  switch (cls) {
    case RealityClass::ComplexV: return 0.0;
    case RealityClass::TypeIII:
      return std::max({std::abs(c[0].real()), std::abs(c[1].real()), std::abs(c[2].real())});
    case RealityClass::TypeIV:
      return std::max({std::abs(c[0].imag()), std::abs(c[1].real()), std::abs(c[2].imag())});
  }
  return 0.0;
}

PhasePoint reality_involution(const PhasePoint& pt, RealityClass cls) {
  if (cls == RealityClass::ComplexV) throw ValidationError("ComplexV has no real involution");
  PhasePoint out = pt;
  out.cls = cls;
  out.p0 = std::conj(pt.p0);
  out.q0 = std::conj(pt.q0);
  const double s = cls == RealityClass::TypeIII ? -1.0 : 1.0;
  out.p1 = s * std::conj(pt.p1);
  out.p3 = s * std::conj(pt.p3);
  out.q1 = s * std::conj(pt.q1);
  out.q3 = s * std::conj(pt.q3);
  return out;
}

}  // namespace spinhiggs
