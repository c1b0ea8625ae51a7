#pragma once

// Extended elliptic top on one site.
//
//   H0(J) = (J1 X1^2 - J2 X2^2 + J3 X3^2) / 2,   H2 = H0(1, 1, 1) = casimir / 2.
//
// Tangent vectors use the coordinate layout of PhasePoint::coords(),
// i.e. (dp0, dp1, dp3, dq0, dq1, dq3).

#include <optional>

#include "spinhiggs/brackets.hpp"
#include "spinhiggs/elliptic.hpp"
#include "spinhiggs/models/calibration.hpp"
#include "spinhiggs/models/lax.hpp"

namespace spinhiggs {

struct TopParams {
  cplx J1 = 1.0, J2 = 1.0, J3 = 1.0;
  std::optional<EllipticCurve> curve;

  cplx operator[](int alpha) const;
  // The coefficients matched to top_lax: J_a = wp at the half period whose
  // twisted function sits on sigma_a.
  static TopParams from_curve(const EllipticCurve& curve);
};

cplx top_energy(const SpinVector& x, const TopParams& params);
cplx top_h2(const SpinVector& x);

// Throws OffShellError when the constraints are violated beyond onshell_tol.
Vec6 top_vector_field(const PhasePoint& pt, const TopParams& params,
                      double onshell_tol = kDiracOnShellTol);
// Same field with no on-shell check (integrator stages).
Vec6 top_vector_field_raw(const PhasePoint& pt, const TopParams& params);

// dX/dt = {H0, X}.
SpinVector top_spin_rhs(const SpinVector& x, const TopParams& params);

LaxSample top_lax(const SpinVector& x, cplx z, const EllipticCurve& curve,
                  const TopLaxCalibration& cal = kTopLax);

Observable top_hamiltonian_observable(const TopParams& params);

}  // namespace spinhiggs
