#include "spinhiggs/elliptic.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace spinhiggs {

cplx HalfPeriodValues::operator[](int alpha) const {
  switch (alpha) {
    case 1: return e1;
    case 2: return e2;
    case 3: return e3;
    default: break;
  }
  throw IndexError("half-period index must be 1, 2 or 3, got " + std::to_string(alpha));
}

EllipticCurve::EllipticCurve(cplx tau, double trunc_tol, int max_terms)
    : tau_(tau), trunc_tol_(trunc_tol), max_terms_(max_terms) {
  if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag())) {
    std::ostringstream os;
    os << "Im(tau) must be positive, got tau = " << tau;
    throw ValidationError(os.str());
  }
  if (!(trunc_tol > 0.0 && trunc_tol <= 1e-6)) {
    throw ValidationError("trunc_tol must lie in (0, 1e-6]");
  }
  if (max_terms < kMinMaxTerms) {
    throw ValidationError("max_terms must be at least " + std::to_string(kMinMaxTerms));
  }
  q_eighth_ = std::exp(kI * kPi * tau_ / 4.0);
  // With t_k the k-th derivative at 0, log theta(z) = log(t1 z) + (t2 / 2t1) z
  // + (t3 / 6t1 - t2^2 / 8t1^2) z^2 + O(z^3), hence the constant below.
  const ThetaJet j0 = sum_series(0.0, 3);
  theta_prime0_ = j0.d1;
  laurent_constant_ = j0.d3 / (3.0 * j0.d1) - j0.d2 * j0.d2 / (4.0 * j0.d1 * j0.d1);

  for (int a = 1; a <= 3; ++a) {
    theta_at_half_periods_[a - 1] = theta(half_period(a));
  }
  half_periods_ = {wp(half_period(1)), wp(half_period(2)), wp(half_period(3))};
}

ThetaJet EllipticCurve::sum_series(cplx z, int order) const {
  const double im_tau = tau_.imag();
  // The term modulus peaks between n_lo and n_lo + 1.
  const double centre = -0.5 - z.imag() / im_tau;
  if (!std::isfinite(centre) || std::abs(centre) > 1e6) {
    throw TruncationError("theta argument too far from the real axis");
  }
  const long n_lo = static_cast<long>(std::floor(centre));

  std::array<cplx, 4> sum{};
  std::array<double, 4> peak{};
  const cplx two_pi_i = 2.0 * kPi * kI;
  auto add = [&](long n, std::array<double, 4>& mag) {
    const double dn = static_cast<double>(n);
    cplx term = std::exp(kI * kPi * (dn * (dn + 1.0) * tau_ + 2.0 * dn * z));
    if (n % 2 != 0) term = -term;
    const cplx w = two_pi_i * dn;
    for (int k = 0; k <= order; ++k) {
      sum[k] += term;
      mag[k] = std::max(mag[k], std::abs(term));
      peak[k] = std::max(peak[k], std::abs(term));
      term *= w;
    }
  };

  int used = 0;
  bool converged = false;
  for (long k = 0; used + 2 <= max_terms_; ++k) {
    std::array<double, 4> mag{};
    add(n_lo - k, mag);
    add(n_lo + 1 + k, mag);
    used += 2;
    if (k < 2) continue;
    bool small = true;
    for (int d = 0; d <= order; ++d) {
      const double scale = std::max(std::abs(sum[d]), peak[d] * std::numeric_limits<double>::epsilon());
      if (mag[d] > trunc_tol_ * scale) small = false;
    }
    if (small) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw TruncationError("theta series did not converge within " + std::to_string(max_terms_) +
                          " terms");
  }
  ThetaJet out{};
  out.value = q_eighth_ * sum[0];
  out.d1 = order >= 1 ? q_eighth_ * sum[1] : cplx{};
  out.d2 = order >= 2 ? q_eighth_ * sum[2] : cplx{};
  out.d3 = order >= 3 ? q_eighth_ * sum[3] : cplx{};
  return out;
}

cplx EllipticCurve::theta(cplx z) const { return sum_series(z, 0).value; }

ThetaJet EllipticCurve::theta_jet(cplx z) const { return sum_series(z, 3); }

bool EllipticCurve::near_lattice(cplx z) const {
  return std::abs(theta(z)) < kPoleGuard * std::abs(theta_prime0_);
}

cplx EllipticCurve::half_period(int alpha) const {
  switch (alpha) {
    case 1: return 0.5;
    case 2: return 0.5 * (1.0 + tau_);
    case 3: return 0.5 * tau_;
    default: break;
  }
  throw IndexError("twisted function index must be 1, 2 or 3, got " + std::to_string(alpha));
}

cplx EllipticCurve::kronecker_with(cplx u, cplx theta_u, cplx z, cplx theta_z) const {
  const double guard = kPoleGuard * std::abs(theta_prime0_);
  if (std::abs(theta_u) < guard) {
    std::ostringstream os;
    os << "kronecker: u = " << u << " is a lattice point";
    throw PoleError(os.str());
  }
  if (std::abs(theta_z) < guard) {
    std::ostringstream os;
    os << "kronecker: z = " << z << " is a lattice point";
    throw PoleError(os.str());
  }
  return theta(u + z) * theta_prime0_ / (theta_u * theta_z);
}

cplx EllipticCurve::kronecker(cplx u, cplx z) const {
  return kronecker_with(u, theta(u), z, theta(z));
}

cplx EllipticCurve::wp(cplx z) const {
  const ThetaJet j = sum_series(z, 2);
  if (std::abs(j.value) < kPoleGuard * std::abs(theta_prime0_)) {
    std::ostringstream os;
    os << "wp: z = " << z << " is a lattice point";
    throw PoleError(os.str());
  }
  const cplx r = j.d1 / j.value;
  return -(j.d2 / j.value - r * r) + laurent_constant_;
}

cplx EllipticCurve::wp_prime(cplx z) const {
  const ThetaJet j = sum_series(z, 3);
  if (std::abs(j.value) < kPoleGuard * std::abs(theta_prime0_)) {
    std::ostringstream os;
    os << "wp_prime: z = " << z << " is a lattice point";
    throw PoleError(os.str());
  }
  const cplx a = j.d1 / j.value;
  const cplx b = j.d2 / j.value;
  const cplx c = j.d3 / j.value;
  return -(c - 3.0 * a * b + 2.0 * a * a * a);
}

cplx EllipticCurve::twisted_phi(int alpha, cplx z) const {
  const cplx w = half_period(alpha);
  const cplx k = kronecker_with(w, theta_at_half_periods_[alpha - 1], z, theta(z));
  return alpha == 1 ? k : std::exp(kI * kPi * z) * k;
}

}  // namespace spinhiggs
