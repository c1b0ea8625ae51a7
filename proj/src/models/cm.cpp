#include "spinhiggs/models/cm.hpp"

#include <cmath>

#include "spinhiggs/flow/sampling.hpp"
#include "spinhiggs/models/top.hpp"

namespace spinhiggs {

std::string to_string(CmVariant v) {
  switch (v) {
    case CmVariant::V: return "V";
    case CmVariant::III: return "III";
    case CmVariant::IV: return "IV";
  }
  return "?";
}

CmVariant parse_cm_variant(const std::string& s) {
  if (s == "V") return CmVariant::V;
  if (s == "III") return CmVariant::III;
  if (s == "IV") return CmVariant::IV;
  throw ValidationError("unknown CM variant '" + s + "' (expected V, III or IV)");
}

namespace {

cplx e_of(cplx x) { return std::exp(2.0 * kPi * kI * x); }

}  // namespace

CmPotential cm_potential(cplx u, const EllipticCurve& curve, CmVariant variant,
                         const CmLaxCalibration& cal) {
  const cplx w = 2.0 * u;
  switch (variant) {
    case CmVariant::V:
      return {cal.kappa * curve.wp(w), 2.0 * cal.kappa * curve.wp_prime(w)};
    case CmVariant::III: {
      const cplx s = std::sinh(w);
      if (std::abs(s) < 1e-8) throw PoleError("cm_potential: sinh(2u) vanishes");
      return {1.0 / (s * s), -4.0 * std::cosh(w) / (s * s * s)};
    }
    case CmVariant::IV: {
      const cplx s = std::sin(w);
      if (std::abs(s) < 1e-8) throw PoleError("cm_potential: sin(2u) vanishes");
      return {1.0 / (s * s), -4.0 * std::cos(w) / (s * s * s)};
    }
  }
  throw ValidationError("cm_potential: bad variant");
}

void validate_cm_state(const CMState& s, const EllipticCurve& curve, CmVariant variant) {
  const SpinVector X = collective_spin(s.spin);
  if (std::abs(X.X3) > kCmX3Tol) {
    throw ValidationError("CM state: X3 = " + std::to_string(std::abs(X.X3)) +
                          " violates the X3 = 0 constraint");
  }
  if (variant == CmVariant::V && curve.near_lattice(2.0 * s.u)) {
    throw PoleError("CM state: 2u is a lattice point");
  }
  cm_potential(s.u, curve, variant);
}

CmEnergy cm_energy(const CMState& s, const EllipticCurve& curve, CmVariant variant) {
  const SpinVector X = collective_spin(s.spin);
  const cplx c = X.plus() * X.minus();
  const CmPotential pot = cm_potential(s.u, curve, variant);
  return {0.5 * c, 0.5 * s.v * s.v + c * pot.W};
}

LaxSample cm_lax(const CMState& s, cplx z, const EllipticCurve& curve,
                 const CmLaxCalibration& cal) {
  const SpinVector X = collective_spin(s.spin);
  const cplx up = X.plus() * e_of(2.0 * s.u) * curve.kronecker(2.0 * s.u, z);
  const cplx dn = X.minus() * e_of(-2.0 * s.u) * curve.kronecker(-2.0 * s.u, z);
  Mat2 L;
  if (cal.plus_on_lower) {
    L << s.v, dn, up, -s.v;
  } else {
    L << s.v, up, dn, -s.v;
  }
  return {z, L};
}

CmTangent cm_vector_field(const CMState& s, const EllipticCurve& curve, CmVariant variant) {
  const SpinVector X = collective_spin(s.spin);
  const cplx c = X.plus() * X.minus();
  const CmPotential pot = cm_potential(s.u, curve, variant);
  TopParams tp;
  tp.J1 = 2.0 * pot.W;
  tp.J2 = 2.0 * pot.W;
  tp.J3 = 0.0;
  return {-c * pot.dW, s.v, top_vector_field_raw(s.spin, tp)};
}

PhasePoint random_x3_free_spin(RealityClass cls, std::mt19937_64& rng) {
  PhasePoint pt = random_onshell(cls, rng);
  const cplx w0 = pt.q0 * pt.q1, w1 = pt.q3 * pt.q3 - pt.q0 * pt.q0, w3 = -pt.q1 * pt.q3;
  const double norm = std::sqrt(std::norm(w0) + std::norm(w1) + std::norm(w3));
  const double r = uniform(rng, 0.5, 1.5) / norm;
  cplx lam = r;
  if (cls == RealityClass::TypeIII) lam = kI * r;
  if (cls == RealityClass::ComplexV) lam = r * std::exp(kI * uniform(rng, 0.0, 2.0 * kPi));
  pt.p0 = lam * w0;
  pt.p1 = lam * w1;
  pt.p3 = lam * w3;
  return pt;
}

}  // namespace spinhiggs
