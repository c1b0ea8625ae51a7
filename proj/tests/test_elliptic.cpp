#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spinhiggs/elliptic.hpp"

using namespace spinhiggs;

namespace {

// Point in the interior of the fundamental parallelogram, away from the lattice.
cplx interior_point(std::mt19937_64& rng, cplx tau) {
  std::uniform_real_distribution<double> a(0.1, 0.9);
  return a(rng) + a(rng) * tau;
}

const cplx kTaus[] = {cplx(0, 1), cplx(0.2, 0.8), cplx(0.5, 1.3)};

}  // namespace

TEST_CASE("theta basic values") {
  const EllipticCurve c(cplx(0, 1));
  CHECK(std::abs(c.theta(0.0)) <= 1e-12);
  CHECK(rel_diff(c.theta(0.3), c.theta(1.3)) <= 1e-12);

  const cplx tau(0.2, 0.8);
  const EllipticCurve c2(tau);
  const cplx z(0.3, 0.1);
  CHECK(rel_diff(c2.theta(z), oracle::theta128(z, tau)) <= 1e-12);
  CHECK(rel_diff(c2.theta_prime0(), oracle::theta128(0.0, tau, 1)) <= 1e-12);
  const ThetaJet j = c2.theta_jet(z);
  CHECK(rel_diff(j.d1, oracle::theta128(z, tau, 1)) <= 1e-12);
  CHECK(rel_diff(j.d2, oracle::theta128(z, tau, 2)) <= 1e-12);
  CHECK(rel_diff(j.d3, oracle::theta128(z, tau, 3)) <= 1e-12);
}

TEST_CASE("theta far from the real axis") {
  const cplx tau(0.1, 0.7);
  const EllipticCurve c(tau);
  const cplx z(0.37, 2.9);
  // theta(z + tau) = -exp(-2 pi i (tau + z)) theta(z) for this normalization
  const cplx lhs = c.theta(z + tau);
  const cplx rhs = -std::exp(-2.0 * kI * kPi * (tau + z)) * c.theta(z);
  CHECK(rel_diff(lhs, rhs) <= 1e-10);
}

TEST_CASE("curve validation") {
  CHECK_THROWS_AS(EllipticCurve(cplx(0.0, -1.0)), ValidationError);
  CHECK_THROWS_AS(EllipticCurve(cplx(0.0, 0.0)), ValidationError);
  CHECK_THROWS_AS(EllipticCurve(cplx(0.0, 1.0), 1e-3), ValidationError);
  CHECK_THROWS_AS(EllipticCurve(cplx(0.0, 1.0), 1e-16, 8), ValidationError);
  CHECK_THROWS_AS(EllipticCurve(cplx(0.0, 0.01), 1e-16, 16), TruncationError);
}

TEST_CASE("kronecker function") {
  const EllipticCurve c(cplx(0, 1));
  CHECK(rel_diff(c.kronecker(0.2, 0.3), c.kronecker(0.3, 0.2)) <= 1e-13);
  const cplx u(0.2, 0.1);
  const double z = 1e-4;
  CHECK(std::abs(z * c.kronecker(u, z) - 1.0) <= 1e-3);

  const cplx tau(0.2, 0.8);
  const EllipticCurve c2(tau);
  const cplx w = 0.37;
  CHECK(rel_diff(c2.kronecker(u, w + 1.0), c2.kronecker(u, w)) <= 1e-10);
  CHECK(rel_diff(c2.kronecker(u, w + tau), std::exp(-2.0 * kPi * kI * u) * c2.kronecker(u, w)) <=
        1e-10);

  CHECK_THROWS_AS(c.kronecker(0.0, 0.3), PoleError);
  CHECK_THROWS_AS(c.kronecker(0.3, 1.0), PoleError);
  CHECK_THROWS_AS(c.kronecker(0.3, cplx(1.0, 1.0)), PoleError);
}

TEST_CASE("wp normalization and relations") {
  const EllipticCurve c(cplx(0, 1));
  const cplx z(0.23, 0.11);
  CHECK(rel_diff(c.wp(-z), c.wp(z)) <= 1e-10);
  CHECK(std::abs(1e-6 * c.wp(1e-3) - 1.0) <= 1e-4);
  const cplx w(0.33, 0.07);
  CHECK(rel_diff(c.kronecker(0.21, w) * c.kronecker(-0.21, w), c.wp(w) - c.wp(0.21)) <= 1e-10);
  CHECK_THROWS_AS(c.wp(0.0), PoleError);
  CHECK_THROWS_AS(c.wp(cplx(2.0, -1.0)), PoleError);

  for (cplx tau : kTaus) {
    const EllipticCurve e(tau);
    for (cplx pt : {cplx(0.31, 0.17), cplx(0.7, 0.4) * tau + 0.2}) {
      CHECK(rel_diff(e.wp(pt), oracle::wp_rows(pt, tau)) <= 1e-10);
      // wp' against a central difference
      const double h = 1e-5;
      const cplx fd = (e.wp(pt + h) - e.wp(pt - h)) / (2.0 * h);
      CHECK(rel_diff(e.wp_prime(pt), fd) <= 1e-7);
    }
  }
}

TEST_CASE("half-period values") {
  const cplx tau(0, 1);
  const EllipticCurve c(tau);
  const HalfPeriodValues e = c.half_periods();
  CHECK(std::abs(e.e1 + e.e2 + e.e3) <= 1e-9);
  CHECK(rel_diff(e.e1, oracle::wp_rows(0.5, tau)) <= 1e-9);
  CHECK(std::abs(e.e2 - oracle::wp_rows(0.5 * (1.0 + tau), tau)) <= 1e-9 * std::abs(e.e1));
  CHECK(rel_diff(e.e3, oracle::wp_rows(0.5 * tau, tau)) <= 1e-9);
  // The plain double sum agrees only to its O(1/N) tail.
  CHECK(rel_diff(e.e1, oracle::wp_lattice(0.5, tau, 200)) <= 1e-3);
  // For tau = i the values are real and e2 = 0 by symmetry.
  CHECK(std::abs(e.e2) <= 1e-9);
  CHECK(std::abs(e.e1.imag()) <= 1e-9);

  const cplx tau2(0.3, 1.1);
  const EllipticCurve c2(tau2);
  CHECK(rel_diff(c2.half_periods().e2, c2.wp(0.5 * (1.0 + tau2))) <= 1e-14);
  CHECK(rel_diff(c2.half_periods()[3], c2.half_periods().e3) == 0.0);
  CHECK_THROWS_AS(c2.half_periods()[0], IndexError);
}

TEST_CASE("twisted functions") {
  const EllipticCurve c(cplx(0, 1));
  CHECK(std::abs(1e-4 * c.twisted_phi(1, 1e-4) - 1.0) <= 1e-3);
  const cplx z(0.31, 0.17);
  for (int a = 1; a <= 3; ++a) {
    const cplx phi = c.twisted_phi(a, z);
    CHECK(rel_diff(phi * phi, c.wp(z) - c.half_periods()[a]) <= 1e-9);
  }
  CHECK_THROWS_AS(c.twisted_phi(4, z), IndexError);
  CHECK_THROWS_AS(c.twisted_phi(0, z), IndexError);
}

TEST_CASE("elliptic properties at random points") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> re(0.0, 1.0);
  std::uniform_real_distribution<double> im(0.5, 2.0);
  int bad = 0;
  for (int s = 0; s < 100; ++s) {
    const cplx tau(re(rng) - 0.5, im(rng));
    const EllipticCurve c(tau);
    const cplx u = interior_point(rng, tau);
    const cplx z = interior_point(rng, tau);
    const cplx phi = c.kronecker(u, z);
    if (std::abs(c.theta(0.0)) > 1e-12) ++bad;
    if (rel_diff(c.theta(z + 1.0), c.theta(z)) > 1e-10) ++bad;
    if (rel_diff(c.kronecker(u, z + 1.0), phi) > 1e-9) ++bad;
    if (rel_diff(c.kronecker(u, z + tau), std::exp(-2.0 * kPi * kI * u) * phi) > 1e-9) ++bad;
    if (rel_diff(phi * c.kronecker(-u, z), c.wp(z) - c.wp(u)) > 1e-9) ++bad;
    const cplx p = c.wp(z);
    if (rel_diff(c.wp(-z), p) > 1e-9) ++bad;
    if (rel_diff(c.wp(z + 1.0), p) > 1e-9) ++bad;
    if (rel_diff(c.wp(z + tau), p) > 1e-9) ++bad;
    for (int a = 1; a <= 3; ++a) {
      const cplx t = c.twisted_phi(a, z);
      if (rel_diff(t * t, p - c.half_periods()[a]) > 1e-9) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("laurent constant against extrapolation") {
  for (cplx tau : kTaus) {
    const EllipticCurve c(tau);
    // Neville extrapolation of -(log theta)'' - 1/z^2 in x = z^2 from z = 0.1 * 2^-k
    double x[5];
    cplx t[5];
    for (int k = 0; k < 5; ++k) {
      const double z = 0.1 * std::ldexp(1.0, -k);
      const ThetaJet j = c.theta_jet(z);
      const cplx r = j.d1 / j.value;
      x[k] = z * z;
      t[k] = -(j.d2 / j.value - r * r) - 1.0 / (z * z);
    }
    for (int m = 1; m < 5; ++m)
      for (int k = 4; k >= m; --k) t[k] = (x[k - m] * t[k] - x[k] * t[k - 1]) / (x[k - m] - x[k]);
    CHECK(rel_diff(-t[4], c.laurent_constant()) <= 1e-9);
  }
  // square lattice: the half-period values are real and e2 vanishes
  const HalfPeriodValues e = EllipticCurve(kI).half_periods();
  CHECK(std::abs(e.e1.imag()) <= 1e-13);
  CHECK(std::abs(e.e3.imag()) <= 1e-13);
  CHECK(std::abs(e.e2) <= 1e-12);
}
