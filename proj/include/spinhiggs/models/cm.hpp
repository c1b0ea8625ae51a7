#pragma once

// Two-body spin Calogero-Moser system with internal spin (p, q) on one site.
//
//   H2 = X+ X- / 2
//   H0 = v^2 / 2 + X+ X- W(u),  W = kappa wp(2u) (V), 1/sinh^2(2u) (III),
//                                   1/sin^2(2u) (IV)
//
// {v, u} = 1 with the same orientation as {p, q}, so du/dt = v.

#include <random>

#include "spinhiggs/elliptic.hpp"
#include "spinhiggs/models/calibration.hpp"
#include "spinhiggs/models/lax.hpp"
#include "spinhiggs/phase_space.hpp"

namespace spinhiggs {

enum class CmVariant { V, III, IV };

std::string to_string(CmVariant v);
CmVariant parse_cm_variant(const std::string& s);

inline constexpr double kCmX3Tol = 1e-8;

struct CMState {
  cplx v;
  cplx u;
  PhasePoint spin;
};

struct CmEnergy {
  cplx H2;
  cplx H0;
};

struct CmPotential {
  cplx W;
  cplx dW;  // dW/du
};

CmPotential cm_potential(cplx u, const EllipticCurve& curve, CmVariant variant,
                         const CmLaxCalibration& cal = kCmLax);

// Throws ValidationError when X3 of the spin exceeds kCmX3Tol, PoleError at a
// singular position.
void validate_cm_state(const CMState& s, const EllipticCurve& curve, CmVariant variant);

CmEnergy cm_energy(const CMState& s, const EllipticCurve& curve, CmVariant variant);

LaxSample cm_lax(const CMState& s, cplx z, const EllipticCurve& curve,
                 const CmLaxCalibration& cal = kCmLax);

struct CmTangent {
  cplx dv;
  cplx du;
  Vec6 dspin;
};

CmTangent cm_vector_field(const CMState& s, const EllipticCurve& curve, CmVariant variant);

// On-shell point of class cls with X3 = 0 exactly: p is proportional to the
// bilinear cross product of q with (q3, 0, q0).
PhasePoint random_x3_free_spin(RealityClass cls, std::mt19937_64& rng);

}  // namespace spinhiggs
