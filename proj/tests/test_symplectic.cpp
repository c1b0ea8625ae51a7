#include <doctest.h>

#include "spinhiggs/brackets.hpp"
#include "spinhiggs/flow/sampling.hpp"
#include "spinhiggs/phase_space.hpp"

using namespace spinhiggs;

namespace {

const RealityClass kClasses[] = {RealityClass::ComplexV, RealityClass::TypeIII,
                                 RealityClass::TypeIV};

PhasePoint make_point(cplx p0, cplx p1, cplx p3, cplx q0, cplx q1, cplx q3,
                      RealityClass c = RealityClass::ComplexV) {
  return PhasePoint{p0, p1, p3, q0, q1, q3, c};
}

double dist(const PhasePoint& a, const PhasePoint& b) {
  return (a.coords() - b.coords()).cwiseAbs().maxCoeff();
}

// Lie-Poisson bracket on functions of X with {X1,X2} = -X3, {X2,X3} = -X1,
// {X3,X1} = X2, gradients by central differences in X.
cplx lie_poisson(const std::function<cplx(const SpinVector&)>& f,
                 const std::function<cplx(const SpinVector&)>& g, const SpinVector& x) {
  auto grad = [&](const std::function<cplx(const SpinVector&)>& h) {
    std::array<cplx, 3> d;
    const double e = 1e-6;
    for (int a = 0; a < 3; ++a) {
      SpinVector xp = x, xm = x;
      cplx* cp[3] = {&xp.X1, &xp.X2, &xp.X3};
      cplx* cm[3] = {&xm.X1, &xm.X2, &xm.X3};
      *cp[a] += e;
      *cm[a] -= e;
      d[a] = (h(xp) - h(xm)) / (2.0 * e);
    }
    return d;
  };
  const auto df = grad(f), dg = grad(g);
  // B[a][b] = {X_a, X_b}
  const cplx B[3][3] = {{0.0, -x.X3, -x.X2}, {x.X3, 0.0, -x.X1}, {x.X2, x.X1, 0.0}};
  cplx s = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) s += df[a] * dg[b] * B[a][b];
  return s;
}

}  // namespace

TEST_CASE("constraints") {
  auto c = constraints(make_point(0.0, 0.7, -0.2, 1.0, 0.0, 0.0));
  CHECK(std::abs(c.c1) == 0.0);
  CHECK(std::abs(c.c2) == 0.0);
  c = constraints(make_point(1.0, 0.0, 0.0, 1.0, 0.0, 0.0));
  CHECK(std::abs(c.c1) == 0.0);
  CHECK(std::abs(c.c2 - 1.0) == 0.0);
  const double s = 0.8;
  // p orthogonal to q = (cosh s, sinh s, 0)
  c = constraints(make_point(std::sinh(s), std::cosh(s), 0.3, std::cosh(s), std::sinh(s), 0.0));
  CHECK(std::abs(c.c1) <= 1e-15);
}

TEST_CASE("project_onshell") {
  for (RealityClass cls : kClasses) {
    const auto pts = sample_onshell(cls, 50, 11);
    for (const PhasePoint& pt : pts) {
      CHECK(constraint_violation(pt) <= 1e-12);
      CHECK(reality_residual(pt) <= 1e-15);
      CHECK(dist(project_onshell(pt), pt) <= 1e-14);
      // Perturb inside the class pattern so that |c_i| ~ 1e-3.
      PhasePoint off = pt;
      const double e = 1e-3 / std::max(1.0, std::abs(pt.q0));
      if (cls == RealityClass::TypeIII) {
        off.q0 += 0.5 * e;
        off.p1 += kI * e;
      } else {
        off.q0 += 0.5 * e;
        off.p1 += e;
      }
      const PhasePoint back = project_onshell(off);
      CHECK(constraint_violation(back) <= 1e-12);
      CHECK(dist(back, off) <= 1e-2);
      CHECK(reality_residual(back) <= 1e-15);
      // idempotence
      CHECK(dist(project_onshell(back), back) <= 1e-13);
    }
  }
  CHECK_THROWS_AS(project_onshell(make_point(1, 1, 1, 0, 0, 0)), DegenerateError);
  CHECK_THROWS_AS(project_onshell(make_point(0, 0, 0, 2.0, 0, 0)), OffShellError);
}

TEST_CASE("collective spin and matrices") {
  const SpinVector x = collective_spin(make_point(0.0, 0.4, -1.1, 1.0, 0.0, 0.0));
  CHECK(x.X1 == cplx(0.4));
  CHECK(x.X2 == cplx(0.0));
  CHECK(x.X3 == cplx(-1.1));
  for (const PhasePoint& pt : sample_onshell(RealityClass::ComplexV, 50, 3)) {
    CHECK(collective_x0(pt) == constraints(pt).c2);
    const SpinVector s = collective_spin(pt);
    const Mat2 qp = q_matrix(pt) * p_matrix(pt);
    // Half-trace extraction against the Pauli basis.
    CHECK(std::abs(0.5 * (qp * pauli(1)).trace() - s.X1) <= 1e-12);
    CHECK(std::abs(0.5 * (qp * pauli(2)).trace() - kI * s.X2) <= 1e-12);
    CHECK(std::abs(0.5 * (qp * pauli(3)).trace() - s.X3) <= 1e-12);
    CHECK(std::abs(0.5 * qp.trace() - collective_x0(pt)) <= 1e-12);
    // PQ differs only by the sign of X2.
    const Mat2 pq = p_matrix(pt) * q_matrix(pt);
    CHECK(std::abs(0.5 * (pq * pauli(2)).trace() + kI * s.X2) <= 1e-12);
    CHECK(std::abs(pq.determinant() - qp.determinant()) <= 1e-10);
    const PhasePoint back = from_matrices(p_matrix(pt), q_matrix(pt), pt.cls);
    CHECK(dist(back, pt) <= 1e-15);
  }
}

TEST_CASE("casimir and spin_matrix") {
  CHECK(casimir({1.0, 0.0, 0.0}) == cplx(1.0));
  CHECK(casimir({0.0, 1.0, 0.0}) == cplx(-1.0));
  const SpinVector a{0.3, 0.0, -0.8};
  Mat2 expect;
  expect << -0.8, 0.3, 0.3, 0.8;
  CHECK(rel_diff(spin_matrix(a), expect) == 0.0);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const SpinVector x{cplx(uniform(rng, -2, 2), uniform(rng, -2, 2)),
                       cplx(uniform(rng, -2, 2), uniform(rng, -2, 2)),
                       cplx(uniform(rng, -2, 2), uniform(rng, -2, 2))};
    const Mat2 m = spin_matrix(x);
    CHECK(std::abs(m.trace()) == 0.0);
    CHECK(std::abs(m.determinant() + casimir(x)) <= 1e-12);
    CHECK(std::abs(0.5 * (m * m).trace() - casimir(x)) <= 1e-12);
    CHECK(std::abs(pairing(x, x) - casimir(x)) == 0.0);
    const SpinVector y = spin_from_matrix(m);
    CHECK(max_abs(y - x) <= 1e-15);
    auto C = [](const SpinVector& s) { return casimir(s); };
    for (int g = 1; g <= 3; ++g) {
      auto Xg = [g](const SpinVector& s) { return s[g]; };
      CHECK(std::abs(lie_poisson(C, Xg, x)) <= 1e-8);
    }
  }
}

TEST_CASE("Dirac bracket golden table") {
  using namespace obs;
  for (RealityClass cls : kClasses) {
    for (const PhasePoint& pt : sample_onshell(cls, 100, 17)) {
      const cplx q0 = pt.q0, q1 = pt.q1, q3 = pt.q3;
      const cplx table[3][3] = {{1.0 - q0 * q0, -q0 * q1, -q0 * q3},
                                {q0 * q1, 1.0 + q1 * q1, q1 * q3},
                                {q0 * q3, q1 * q3, 1.0 + q3 * q3}};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const cplx d = dirac_bracket(coordinate(i), coordinate(3 + j), pt);
          CHECK(std::abs(d - table[i][j]) <= 1e-12 * std::max(1.0, std::abs(table[i][j])));
        }
      }
      const SpinVector x = collective_spin(pt);
      CHECK(std::abs(dirac_bracket(spin(1), spin(2), pt) + x.X3) <= 1e-10);
      CHECK(std::abs(dirac_bracket(spin(2), spin(3), pt) + x.X1) <= 1e-10);
      CHECK(std::abs(dirac_bracket(spin(3), spin(1), pt) - x.X2) <= 1e-10);
      CHECK(std::abs(dirac_bracket(c1(), coordinate(kP1), pt)) <= 1e-10);
      CHECK(std::abs(dirac_bracket(c2(), spin(2), pt)) <= 1e-10);
      CHECK(dirac_bracket(coordinate(kP0), coordinate(kP0), pt) == cplx(0.0));
    }
  }
  // Finite-difference gradients reproduce the analytic bracket.
  const PhasePoint pt = random_onshell(RealityClass::ComplexV, 99, 0);
  Observable x1 = obs::spin(1);
  Observable x2 = obs::spin(2);
  x1.gradient = nullptr;
  x2.gradient = nullptr;
  CHECK(std::abs(dirac_bracket(x1, x2, pt) + collective_spin(pt).X3) <= 1e-8);

  PhasePoint off = pt;
  off.q0 += 1e-3;
  CHECK_THROWS_AS(dirac_bracket(obs::spin(1), obs::spin(2), off), OffShellError);
  // q0^2 - q1^2 - q3^2 = 0 makes {c1, c2} vanish.
  const PhasePoint sing = make_point(0, 0, 0, 1.0, 1.0, 0.0);
  CHECK_THROWS_AS(dirac_bracket_unchecked(obs::spin(1), obs::spin(2), flatten(sing)),
                  SingularError);
}

TEST_CASE("pq_decompose and coadjoint_moment") {
  Mat2 zeta;
  zeta << 0.3, cplx(0.1, 0.2), cplx(0.1, 0.2), -0.3;
  const MatrixPair id = pq_decompose(Mat2::Identity(), zeta);
  CHECK(rel_diff(id.P, zeta) == 0.0);
  CHECK(rel_diff(id.Q, Mat2::Identity()) == 0.0);
  CHECK(rel_diff(id.X, zeta) == 0.0);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 50; ++k) {
    Mat2 g;
    g << cplx(uniform(rng, -1, 1), uniform(rng, -1, 1)), cplx(uniform(rng, -1, 1), uniform(rng, -1, 1)),
        cplx(uniform(rng, -1, 1), uniform(rng, -1, 1)), cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
    g /= std::sqrt(g.determinant());
    const MatrixPair m = pq_decompose(g, zeta);
    CHECK(rel_diff((m.X * m.X).trace(), (zeta * zeta).trace()) <= 1e-12);
    const Mat2 conj = g.inverse() * zeta * g;
    CHECK(rel_diff(m.X, conj) <= 1e-12);
    CHECK(rel_diff(m.P, m.P.transpose()) <= 1e-14);
    CHECK(rel_diff(m.Q, m.Q.transpose()) <= 1e-14);
    CHECK(std::abs(m.Q.determinant() - 1.0) <= 1e-12);
    // The symmetric pair is a phase point whose spin matrix is Q P.
    const PhasePoint pt = from_matrices(m.P, m.Q, RealityClass::ComplexV);
    CHECK(rel_diff(spin_matrix(collective_spin(pt)), m.Q * m.P) <= 1e-12);
    CHECK(std::abs(constraints(pt).c1) <= 1e-12);
    CHECK(std::abs(constraints(pt).c2) <= 1e-12);

    const cplx nu(uniform(rng, -1, 1), uniform(rng, -1, 1));
    const Mat2 S = coadjoint_moment(nu, g);
    CHECK(rel_diff(0.5 * (S * S).trace(), nu * nu) <= 1e-12);
  }
  const Mat2 S0 = coadjoint_moment(0.0, Mat2::Identity());
  CHECK(S0.cwiseAbs().maxCoeff() == 0.0);
  Mat2 d = Mat2::Zero();
  d(0, 0) = 0.7;
  d(1, 1) = -0.7;
  CHECK(rel_diff(coadjoint_moment(0.7, Mat2::Identity()), d) == 0.0);
  CHECK_THROWS_AS(pq_decompose(Mat2::Zero(), zeta), SingularError);
  CHECK_THROWS_AS(coadjoint_moment(1.0, Mat2::Zero()), SingularError);
  Mat2 bad = zeta;
  bad(0, 1) += 1.0;
  CHECK_THROWS_AS(pq_decompose(Mat2::Identity(), bad), ValidationError);
}

TEST_CASE("reality residual") {
  CHECK(reality_residual(make_point(0.1, 0.2, 0.3, 1.0, 0.0, 0.0, RealityClass::TypeIV)) == 0.0);
  CHECK(reality_residual(make_point(0.4, 0.3 * kI, 0.0, 1.0, 0.0, 0.0, RealityClass::TypeIII)) ==
        0.0);
  CHECK(reality_residual(make_point(0.4, 0.3, 0.0, 1.0, 0.0, 0.0, RealityClass::TypeIII)) ==
        doctest::Approx(0.3));
  CHECK(reality_residual(make_point(0.4, 0.3, 0.0, 1.0, 0.0, 0.0, RealityClass::ComplexV)) == 0.0);
  CHECK(parse_reality_class("III") == RealityClass::TypeIII);
  CHECK_THROWS_AS(parse_reality_class("VI"), ValidationError);
}

TEST_CASE("bracket algebra over sampled points") {
  using namespace obs;
  const Observable X[3] = {spin(1), spin(2), spin(3)};
  const Observable C[2] = {c1(), c2()};
  for (RealityClass cls : kClasses) {
    double worst_xc = 0.0, worst_closure = 0.0, worst_c12 = 0.0, worst_sphere = 0.0,
           worst_spin_real = 0.0;
    for (const PhasePoint& pt : sample_onshell(cls, 1000, 2024)) {
      const VecX v = flatten(pt);
      for (const auto& xa : X)
        for (const auto& ci : C) worst_xc = std::max(worst_xc, std::abs(canonical_bracket(xa, ci, v)));
      const SpinVector s = collective_spin(pt);
      worst_closure = std::max({worst_closure, std::abs(dirac_bracket(X[0], X[1], v) + s.X3),
                                std::abs(dirac_bracket(X[1], X[2], v) + s.X1),
                                std::abs(dirac_bracket(X[2], X[0], v) - s.X2)});
      worst_c12 = std::max(worst_c12, std::abs(constraint_brackets(v)[0] + 2.0));
      if (cls == RealityClass::TypeIII) {
        worst_sphere = std::max(
            worst_sphere, std::abs(std::norm(pt.q0) + std::norm(pt.q1) + std::norm(pt.q3) - 1.0));
      }
      worst_spin_real = std::max(worst_spin_real, spin_reality_residual(s, cls));
    }
    CHECK(worst_xc <= 1e-12);
    CHECK(worst_closure <= 1e-8);
    CHECK(worst_c12 <= 1e-12);
    CHECK(worst_sphere <= 1e-10);
    CHECK(worst_spin_real <= 1e-12);
  }
}

TEST_CASE("Dirac bracket Jacobi identity") {
  std::vector<Observable> coords;
  for (int k = 0; k < 6; ++k) coords.push_back(obs::coordinate(k));
  const int triples[][3] = {{0, 3, 4}, {1, 2, 5}, {0, 1, 2}, {3, 4, 5}, {2, 3, 5}};
  double worst = 0.0;
  for (RealityClass cls : kClasses) {
    for (const PhasePoint& pt : sample_onshell(cls, 40, 77)) {
      const VecX v = flatten(pt);
      for (const auto& t : triples) {
        const Observable& f = coords[t[0]];
        const Observable& g = coords[t[1]];
        const Observable& h = coords[t[2]];
        const cplx j = dirac_bracket(f, bracket_observable(g, h, BracketKind::Dirac), v) +
                       dirac_bracket(g, bracket_observable(h, f, BracketKind::Dirac), v) +
                       dirac_bracket(h, bracket_observable(f, g, BracketKind::Dirac), v);
        worst = std::max(worst, std::abs(j));
      }
    }
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("involution fixes the real loci") {
  for (RealityClass cls : {RealityClass::TypeIII, RealityClass::TypeIV}) {
    for (const PhasePoint& pt : sample_onshell(cls, 20, 4)) {
      CHECK(dist(reality_involution(pt, cls), pt) <= 1e-15);
    }
    for (const PhasePoint& pt : sample_onshell(RealityClass::ComplexV, 20, 4)) {
      const Mat2 x = spin_matrix(collective_spin(pt));
      const Mat2 y = spin_matrix(collective_spin(reality_involution(pt, cls)));
      const Mat2 expect = cls == RealityClass::TypeIII ? Mat2(-x.adjoint()) : Mat2(x.conjugate());
      CHECK(rel_diff(y, expect) <= 1e-14);
    }
  }
}
