#pragma once

// Theta, Kronecker and Weierstrass functions on the torus C / (Z + tau Z).
//
// Conventions:
//   theta(z)     = q^{1/8} sum_n (-1)^n exp(pi i (n(n+1) tau + 2 n z)),  q = exp(2 pi i tau)
//   kronecker    phi(u, z) = theta(u + z) theta'(0) / (theta(u) theta(z))
//   wp(z)        = -(log theta)''(z) + C, with C fixed so that wp(z) = 1/z^2 + O(z^2)
//   twisted_phi  phi_1 = phi(1/2, z), phi_2 = e^{pi i z} phi((1+tau)/2, z),
//                phi_3 = e^{pi i z} phi(tau/2, z)
//
// An EllipticCurve is an immutable value: theta'(0), the Laurent constant C and
// the half-period values are computed eagerly in the constructor, so every
// member function is const and safe to call concurrently.

#include <array>

#include "spinhiggs/common.hpp"

namespace spinhiggs {

// Values of theta and its first three z-derivatives at one point.
struct ThetaJet {
  cplx value;
  cplx d1;
  cplx d2;
  cplx d3;
};

// e1 = wp(1/2), e2 = wp((1+tau)/2), e3 = wp(tau/2).
struct HalfPeriodValues {
  cplx e1;
  cplx e2;
  cplx e3;

  cplx operator[](int alpha) const;  // alpha in {1, 2, 3}
};

class EllipticCurve {
 public:
  static constexpr double kDefaultTruncTol = 1e-16;
  static constexpr int kDefaultMaxTerms = 128;
  static constexpr int kMinMaxTerms = 16;
  // |theta| below kPoleGuard * |theta'(0)| is treated as a lattice point.
  static constexpr double kPoleGuard = 1e-10;

  explicit EllipticCurve(cplx tau, double trunc_tol = kDefaultTruncTol,
                         int max_terms = kDefaultMaxTerms);

  cplx tau() const { return tau_; }
  double trunc_tol() const { return trunc_tol_; }
  int max_terms() const { return max_terms_; }

  cplx theta(cplx z) const;
  ThetaJet theta_jet(cplx z) const;
  cplx theta_prime0() const { return theta_prime0_; }

  cplx kronecker(cplx u, cplx z) const;
  cplx wp(cplx z) const;
  cplx wp_prime(cplx z) const;
  HalfPeriodValues half_periods() const { return half_periods_; }

  // The half period omega_alpha paired with twisted_phi(alpha):
  // (1/2, (1+tau)/2, tau/2) for alpha = 1, 2, 3.
  cplx half_period(int alpha) const;
  cplx twisted_phi(int alpha, cplx z) const;

  // Additive constant C in wp = -(log theta)'' + C.
  cplx laurent_constant() const { return laurent_constant_; }

  // True when |theta(z)| is below the pole guard.
  bool near_lattice(cplx z) const;

 private:
  // Sums the defining series and its derivatives up to `order` (0..3).
  ThetaJet sum_series(cplx z, int order) const;
  cplx kronecker_with(cplx u, cplx theta_u, cplx z, cplx theta_z) const;

  cplx tau_;
  double trunc_tol_;
  int max_terms_;
  cplx q_eighth_;
  cplx theta_prime0_;
  cplx laurent_constant_;
  std::array<cplx, 3> theta_at_half_periods_{};
  HalfPeriodValues half_periods_{};
};

}  // namespace spinhiggs
