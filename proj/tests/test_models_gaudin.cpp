#include <doctest.h>

#include "spinhiggs/flow/sampling.hpp"
#include "spinhiggs/models/gaudin.hpp"

using namespace spinhiggs;

namespace {

GaudinState state(RealityClass cls, int n, std::uint64_t k, int pairs = 0) {
  auto rng = make_stream(505, k);
  return random_gaudin_state(cls, n, rng, pairs);
}

double scale_of(const VecX& v) { return std::max(1.0, v.cwiseAbs().maxCoeff()); }

}  // namespace

TEST_CASE("gaudin spins and brackets") {
  GaudinState s;
  s.sites = {PhasePoint{0.0, 0.4, -0.9, 1.0, 0.0, 0.0}};
  s.marks = {0.0};
  const auto X = gaudin_spins(s);
  REQUIRE(X.size() == 1);
  CHECK(X[0].X1 == 0.4);
  CHECK(X[0].X2 == 0.0);
  CHECK(X[0].X3 == -0.9);
  CHECK(gaudin_spins(state(RealityClass::ComplexV, 4, 0)).size() == 4);

  // {X_a^i, X_b^j} = delta_ab c_ijk X_k: same-site values from the sl(2) table
  double cross = 0.0, same = 0.0;
  for (int k = 0; k < 50; ++k) {
    const GaudinState g = state(RealityClass::ComplexV, 3, k);
    const VecX x = flatten(g.sites);
    const auto Xs = gaudin_spins(g);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (int i = 1; i <= 3; ++i) {
          for (int j = 1; j <= 3; ++j) {
            Observable fi = obs::spin(i, a), gj = obs::spin(j, b);
            fi.gradient = nullptr;
            gj.gradient = nullptr;
            const cplx br = dirac_bracket(fi, gj, x);
            if (a != b) {
              cross = std::max(cross, std::abs(br));
              continue;
            }
            // {X1,X2} = -X3, {X2,X3} = -X1, {X3,X1} = X2
            cplx expect = 0.0;
            const SpinVector& S = Xs[a];
            if (i == 1 && j == 2) expect = -S.X3;
            if (i == 2 && j == 1) expect = S.X3;
            if (i == 2 && j == 3) expect = -S.X1;
            if (i == 3 && j == 2) expect = S.X1;
            if (i == 3 && j == 1) expect = S.X2;
            if (i == 1 && j == 3) expect = -S.X2;
            same = std::max(same, std::abs(br - expect));
          }
        }
      }
    }
  }
  CHECK(cross <= 1e-8);
  CHECK(same <= 1e-8);
}

TEST_CASE("gaudin hamiltonians") {
  for (int k = 0; k < 100; ++k) {
    const GaudinState g2 = state(RealityClass::ComplexV, 2, k);
    const auto h2 = gaudin_hamiltonians(g2);
    CHECK(h2.H1[0] + h2.H1[1] == 0.0);
    for (int a = 0; a < 2; ++a) CHECK(h2.H2[a] == casimir(collective_spin(g2.sites[a])));
  }

  // partial fractions of tr L^2 / 2: double pole H2^a, simple pole -2 H1^a
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const GaudinState g = state(RealityClass::ComplexV, 3, 1000 + k);
    const auto h = gaudin_hamiltonians(g);
    for (int a = 0; a < 3; ++a) {
      // coefficient of (z - x_a)^-1 in f(z) = tr L^2 / 2 from a circle of radius r
      const double r = 1e-3;
      const int m = 16;
      cplx c_m1 = 0.0, c_m2 = 0.0;
      for (int j = 0; j < m; ++j) {
        const cplx w = r * std::exp(2.0 * kPi * kI * (double(j) / m));
        const cplx f = 0.5 * trace_sq(gaudin_lax(g, g.marks[a] + w).L);
        c_m1 += f * w / double(m);
        c_m2 += f * w * w / double(m);
      }
      worst = std::max(worst, rel_diff(c_m1, -2.0 * h.H1[a]));
      worst = std::max(worst, rel_diff(c_m2, h.H2[a]));
    }
  }
  CHECK(worst <= 1e-8);

  GaudinState bad = state(RealityClass::ComplexV, 2, 3);
  bad.marks = {0.0, 0.0};
  CHECK_THROWS_AS(gaudin_hamiltonians(bad), ValidationError);
  bad.marks = {0.0};
  CHECK_THROWS_AS(validate_gaudin(bad), ValidationError);
}

TEST_CASE("gaudin lax") {
  GaudinState one = state(RealityClass::ComplexV, 1, 4);
  const SpinVector X = collective_spin(one.sites[0]);
  const cplx z = one.marks[0] + cplx(0.3, -0.2);
  CHECK(rel_diff(trace_sq(gaudin_lax(one, z).L),
                 2.0 * casimir(X) / ((z - one.marks[0]) * (z - one.marks[0]))) <= 1e-14);

  for (int k = 0; k < 50; ++k) {
    const GaudinState g = state(RealityClass::ComplexV, 3, 2000 + k);
    Mat2 total = Mat2::Zero();
    for (int a = 0; a < 3; ++a) {
      const Mat2 Xa = spin_matrix(collective_spin(g.sites[a]));
      total += Xa;
      Mat2 R = Mat2::Zero();
      for (int j = 0; j < 4; ++j) {
        const cplx w = 1e-4 * std::pow(kI, j);
        R += 0.25 * w * gaudin_lax(g, g.marks[a] + w).L;
      }
      CHECK((R - Xa).cwiseAbs().maxCoeff() <= 1e-6);
      CHECK(std::abs(gaudin_lax(g, g.marks[a] + 0.37).L.trace()) <= 1e-13);
    }
    const cplx big = 1e6 * std::exp(kI * 0.4);
    CHECK((big * gaudin_lax(g, big).L - total).cwiseAbs().maxCoeff() <= 1e-4);
    CHECK_THROWS_AS(gaudin_lax(g, g.marks[1]), PoleError);
  }
}

TEST_CASE("gaudin vector fields") {
  double h2_err = 0.0, h1_err = 0.0, spin_drift = 0.0, other = 0.0;
  for (int k = 0; k < 40; ++k) {
    GaudinState g = state(RealityClass::ComplexV, 3, 3000 + k);
    // push off shell: the matrix equations hold for the canonical flows anywhere
    if (k % 2) {
      for (auto& pt : g.sites) pt.p0 += 0.05;
    }
    const VecX x = flatten(g.sites);
    for (int a = 0; a < 3; ++a) {
      for (GaudinFlow w : {GaudinFlow::H2, GaudinFlow::H1}) {
        const VecX v = gaudin_vector_field(g, a, w);
        Observable H = gaudin_observable(g.marks, a, w);
        H.gradient = nullptr;
        const VecX dH = H.grad(x);
        // dq = dH/dp, dp = -dH/dq
        VecX ref(x.size());
        for (Eigen::Index b = 0; b < x.size(); b += 6) {
          ref.segment<3>(b + 3) = dH.segment<3>(b);
          ref.segment<3>(b) = -dH.segment<3>(b + 3);
        }
        const double e = (v - ref).cwiseAbs().maxCoeff() / scale_of(ref);
        if (w == GaudinFlow::H2) {
          h2_err = std::max(h2_err, e);
          for (int b = 0; b < 3; ++b) {
            if (b != a) other = std::max(other, v.segment<6>(6 * b).cwiseAbs().maxCoeff());
          }
        } else {
          h1_err = std::max(h1_err, e);
          // total spin is stationary
          SpinVector dS{0.0, 0.0, 0.0};
          for (int b = 0; b < 3; ++b) {
            const auto gr = spin_gradients(g.sites[b]);
            const Vec6 vb = v.segment<6>(6 * b);
            dS = dS + SpinVector{(gr[0].transpose() * vb)(0), (gr[1].transpose() * vb)(0),
                                 (gr[2].transpose() * vb)(0)};
          }
          spin_drift = std::max(spin_drift, max_abs(dS) / scale_of(v));
        }
      }
    }
  }
  CHECK(h2_err <= 1e-7);
  CHECK(h1_err <= 1e-7);
  CHECK(other == 0.0);
  CHECK(spin_drift <= 1e-9);
}

TEST_CASE("gaudin commuting hamiltonians") {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const GaudinState g = state(RealityClass::ComplexV, 3, 4000 + k);
    const VecX x = flatten(g.sites);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        Observable h1a = gaudin_observable(g.marks, a, GaudinFlow::H1);
        Observable h1b = gaudin_observable(g.marks, b, GaudinFlow::H1);
        Observable h2a = gaudin_observable(g.marks, a, GaudinFlow::H2);
        for (Observable* o : {&h1a, &h1b, &h2a}) o->gradient = nullptr;
        worst = std::max(worst, std::abs(canonical_bracket(h1a, h1b, x)));
        worst = std::max(worst, std::abs(canonical_bracket(h2a, h1b, x)));
      }
    }
  }
  CHECK(worst <= 1e-7);
}

TEST_CASE("gaudin reality") {
  for (RealityClass cls : {RealityClass::TypeIII, RealityClass::TypeIV}) {
    for (int k = 0; k < 50; ++k) {
      const GaudinState g = state(cls, 5, 5000 + k, 2);
      CHECK(gaudin_reality_residual(g) <= 1e-15);
      int real_marks = 0;
      for (std::size_t a = 0; a < g.marks.size(); ++a) {
        const SpinVector X = collective_spin(g.sites[a]);
        const Mat2 M = spin_matrix(X);
        if (g.marks[a].imag() == 0.0) {
          ++real_marks;
          CHECK(spin_reality_residual(X, cls) <= 1e-14);
          if (cls == RealityClass::TypeIII) CHECK((M + M.adjoint()).cwiseAbs().maxCoeff() <= 1e-14);
          if (cls == RealityClass::TypeIV) CHECK((M - M.conjugate()).cwiseAbs().maxCoeff() <= 1e-14);
        }
      }
      CHECK(real_marks == 1);
      // L(conj z) is the image of L(z) under the class involution
      const cplx z(0.3, 0.45);
      const Mat2 L = gaudin_lax(g, z).L, Lc = gaudin_lax(g, std::conj(z)).L;
      const Mat2 image = cls == RealityClass::TypeIII ? Mat2(-L.adjoint()) : Mat2(L.conjugate());
      CHECK((Lc - image).cwiseAbs().maxCoeff() <= 1e-12 * L.cwiseAbs().maxCoeff());
    }
  }
  GaudinState g = state(RealityClass::TypeIV, 3, 6000, 1);
  g.sites[2].p0 += 0.1;
  CHECK(gaudin_reality_residual(g) > 1e-3);
}
