#include "spinhiggs/models/top.hpp"

namespace spinhiggs {

cplx TopParams::operator[](int alpha) const {
  switch (alpha) {
    case 1: return J1;
    case 2: return J2;
    case 3: return J3;
    default: break;
  }
  throw IndexError("TopParams index must be 1, 2 or 3");
}

TopParams TopParams::from_curve(const EllipticCurve& curve) {
  const HalfPeriodValues e = curve.half_periods();
  TopParams p;
  p.J1 = e[kTopLax.slot[0]];
  p.J2 = e[kTopLax.slot[1]];
  p.J3 = e[kTopLax.slot[2]];
  p.curve = curve;
  return p;
}

cplx top_energy(const SpinVector& x, const TopParams& p) {
  return 0.5 * (p.J1 * x.X1 * x.X1 - p.J2 * x.X2 * x.X2 + p.J3 * x.X3 * x.X3);
}

cplx top_h2(const SpinVector& x) { return 0.5 * casimir(x); }

Vec6 top_vector_field_raw(const PhasePoint& pt, const TopParams& p) {
  const SpinVector X = collective_spin(pt);
  const cplx h1 = p.J1 * X.X1, h2 = p.J2 * X.X2, h3 = p.J3 * X.X3;
  Vec6 v;
  v[kQ0] = h1 * pt.q1 + h3 * pt.q3;
  v[kQ1] = h1 * pt.q0 - h2 * pt.q3;
  v[kQ3] = h2 * pt.q1 + h3 * pt.q0;
  v[kP0] = -(h1 * pt.p1 + h3 * pt.p3);
  v[kP1] = -(h1 * pt.p0 + h2 * pt.p3);
  v[kP3] = h2 * pt.p1 - h3 * pt.p0;
  return v;
}

Vec6 top_vector_field(const PhasePoint& pt, const TopParams& p, double onshell_tol) {
  const double viol = constraint_violation(pt);
  if (viol > onshell_tol) {
    throw OffShellError("top_vector_field: point is off shell by " + std::to_string(viol));
  }
  return top_vector_field_raw(pt, p);
}

SpinVector top_spin_rhs(const SpinVector& x, const TopParams& p) {
  return {(p.J3 - p.J2) * x.X2 * x.X3, (p.J3 - p.J1) * x.X1 * x.X3,
          (p.J2 - p.J1) * x.X1 * x.X2};
}

LaxSample top_lax(const SpinVector& x, cplx z, const EllipticCurve& curve,
                  const TopLaxCalibration& cal) {
  const cplx c2 = cal.i_on_x2 ? kI : cplx(1.0);
  const cplx coef[3] = {x.X1, c2 * x.X2, x.X3};
  Mat2 L = Mat2::Zero();
  for (int a = 0; a < 3; ++a) {
    L += (static_cast<double>(cal.sign[a]) * coef[a] * curve.twisted_phi(cal.slot[a], z)) *
         pauli(a + 1);
  }
  return {z, L};
}

Observable top_hamiltonian_observable(const TopParams& p) {
  return obs::spin_quadratic(p.J1, p.J2, p.J3, 0, "H0");
}

}  // namespace spinhiggs
