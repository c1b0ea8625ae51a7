#include "spinhiggs/cli/check.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "spinhiggs/flow/audit.hpp"
#include "spinhiggs/flow/sampling.hpp"
#include "spinhiggs/flow/scan.hpp"
#include "spinhiggs/models/quantum_top.hpp"

namespace spinhiggs {

bool CheckItem::pass() const {
  if (!std::isfinite(value)) return false;
  return op == CheckOp::Le ? value <= limit : value >= limit;
}

bool CriterionResult::pass() const {
  if (!error.empty() || checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.pass(); });
}

bool CheckReport::pass() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.pass(); });
}

namespace {

struct Checks {
  std::vector<CheckItem>& out;
  void le(std::string name, double v, double limit) {
    out.push_back({std::move(name), v, CheckOp::Le, limit});
  }
  void ge(std::string name, double v, double limit) {
    out.push_back({std::move(name), v, CheckOp::Ge, limit});
  }
};

const RealityClass kClasses[] = {RealityClass::ComplexV, RealityClass::TypeIII,
                                 RealityClass::TypeIV};

struct CurveCase {
  cplx tau;
  const char* label;
};
const CurveCase kCurves[] = {{cplx(0.0, 1.0), "tau=i"},
                             {cplx(0.2, 0.8), "tau=0.2+0.8i"},
                             {cplx(0.5, 1.3), "tau=0.5+1.3i"}};

std::string cls_label(RealityClass c) { return "class " + to_string(c); }

PhasePoint scale_momentum(PhasePoint pt, double f) {
  pt.p0 *= f;
  pt.p1 *= f;
  pt.p3 *= f;
  return pt;
}

double entry_rel(const ConservationReport& r, const std::string& name) {
  for (const auto& e : r.entries) {
    if (e.name == name) return e.max_rel;
  }
  throw ValidationError("no audited observable named " + name);
}

double coord_move(const Trajectory& tr, int off) {
  double m = 0.0;
  for (const auto& s : tr.states) {
    m = std::max(m, (s.y.segment<6>(off) - tr.states.front().y.segment<6>(off)).cwiseAbs().maxCoeff());
  }
  return m;
}

// Trajectory presets shared by several criteria.

// TypeIII start with |X| about 3, so discretization error sits well above roundoff.
PhasePoint brisk_point() { return scale_momentum(random_onshell(RealityClass::TypeIII, 7, 3), 3.0); }

TopParams brisk_params() {
  auto rng = make_stream(99, 3);
  const double a = uniform(rng, -2, 2), b = uniform(rng, -2, 2), c = uniform(rng, -2, 2);
  return TopParams{a, b, c, std::nullopt};
}

CMState cm_start(CmVariant v) {
  switch (v) {
    case CmVariant::V: {
      auto rng = make_stream(31, 0);
      return {0.3, 0.25, random_x3_free_spin(RealityClass::TypeIII, rng)};
    }
    case CmVariant::III: {
      auto rng = make_stream(31, 1);
      return {0.5, 2.0, random_x3_free_spin(RealityClass::TypeIII, rng)};
    }
    case CmVariant::IV: {
      auto rng = make_stream(31, 2);
      CMState s{0.3, 0.6, random_x3_free_spin(RealityClass::TypeIV, rng)};
      s.spin = scale_momentum(s.spin, 0.05 / max_abs(collective_spin(s.spin)));
      return s;
    }
  }
  return {};
}

// ---------------------------------------------------------------- criteria

std::vector<GroupType> all_types() {
  std::vector<GroupType> v;
  for (int l = 1; l <= 12; ++l) v.push_back(GroupType::make(Series::A, l));
  for (int l = 2; l <= 12; ++l) {
    v.push_back(GroupType::make(Series::B, l));
    v.push_back(GroupType::make(Series::C, l));
  }
  for (int l = 3; l <= 12; ++l) v.push_back(GroupType::make(Series::D, l));
  for (const char* e : {"G2", "F4", "E6", "E7", "E8"}) v.push_back(GroupType::parse(e));
  return v;
}

void dims_criterion(Checks& c) {
  const GroupType a1 = GroupType::parse("A1");
  c.le("|dim X_V(A1) - 2|", std::abs(double(dim_report(a1).dim_XV - 2)), 0.0);
  c.le("|dim M_V(A1, g=1, n=1) - 4|", std::abs(double(count_report(a1, 1, 1).dim_M_V - 4)), 0.0);
  for (int n = 2; n <= 4; ++n) {
    const auto d = count_report(a1, 0, n).dim_M_V;
    c.le("|dim M_V(A1, g=0, n=" + std::to_string(n) + ") - 2(2n-3)|",
         std::abs(double(d - 2 * (2 * n - 3))), 0.0);
  }

  int dim_fail = 0, count_fail = 0;
  for (const GroupType& gt : all_types()) {
    const DimReport r = dim_report(gt);
    const std::int64_t l = gt.rank;
    std::int64_t sd = 0, s2 = 0;
    for (int d : r.orders) {
      sd += d;
      s2 += 2 * d - 1;
    }
    const bool ok = s2 == classical_dimension(gt) && r.dim_G == 2 * sd - l && r.dim_C == r.dim_G &&
                    r.dim_GR == r.dim_G && r.dim_XV == sd && r.dim_Fl == sd - l &&
                    r.dim_XV == r.dim_Fl + l && 2 * r.dim_XIII == r.dim_XI + l &&
                    r.dim_XIV == r.dim_XIII && r.orbit_dim == r.dim_G - l && r.dim_U == r.dim_Uc &&
                    r.coxeter == r.orders.back();
    if (!ok) ++dim_fail;
    for (int g = 0; g <= 4; ++g) {
      for (int n = 0; n <= 4; ++n) {
        const CountReport k = count_report(gt, g, n);
        std::int64_t sum = 0;
        bool good = k.n_j.size() == r.orders.size();
        for (std::size_t j = 0; good && j < k.n_j.size(); ++j) {
          good = k.n_j[j] == (2 * r.orders[j] - 1) * (g - 1) + n * r.orders[j];
          sum += k.n_j[j];
        }
        good = good && k.N_G == sum && k.N_G == (g - 1) * r.dim_G + n * r.dim_XV &&
               k.deficiency == n * r.dim_Fl && k.dim_M_V == 2 * k.dim_Bun_V &&
               k.dim_M_I_II - 2 * k.N_G_R == 2 * k.deficiency && k.parabolic_excess == n * l;
        if (g >= 2 && n == 0) good = good && 2 * k.N_G == k.dim_M_V;
        if (!good) ++count_fail;
      }
    }
  }
  c.le("dimension identity failures over all types", dim_fail, 0.0);
  c.le("count identity failures over all types, g,n <= 4", count_fail, 0.0);
}

void elliptic_criterion(Checks& c, std::uint64_t seed) {
  for (int t = 0; t < 3; ++t) {
    const cplx tau = kCurves[t].tau;
    const EllipticCurve e(tau);
    auto rng = make_stream(seed, 200 + t);
    auto interior = [&] { return uniform(rng, 0.1, 0.9) + uniform(rng, 0.1, 0.9) * tau; };
    double quasi = 0.0, residue = 0.0, relation = 0.0, twisted = 0.0;
    for (int k = 0; k < 100; ++k) {
      const cplx u = interior(), z = interior();
      const cplx phi = e.kronecker(u, z);
      quasi = std::max({quasi, rel_diff(e.kronecker(u, z + 1.0), phi),
                        rel_diff(e.kronecker(u, z + tau), std::exp(-2.0 * kPi * kI * u) * phi)});
      // (1/2 pi i) contour integral over |w| = 0.05 as a 16-point mean of w phi(u, w)
      cplx mean = 0.0;
      for (int j = 0; j < 16; ++j) {
        const cplx w = 0.05 * std::exp(2.0 * kPi * kI * (j / 16.0));
        mean += w * e.kronecker(u, w) / 16.0;
      }
      residue = std::max(residue, rel_diff(mean, 1.0));
      relation = std::max(relation, rel_diff(phi * e.kronecker(-u, z), e.wp(z) - e.wp(u)));
      const cplx p = e.wp(z);
      for (int a = 1; a <= 3; ++a) {
        const cplx f = e.twisted_phi(a, z);
        twisted = std::max(twisted, rel_diff(f * f, p - e.half_periods()[a]));
      }
    }
    const std::string lab = std::string(" ") + kCurves[t].label;
    c.le("kronecker quasi-periodicity" + lab, quasi, 1e-9);
    c.le("kronecker residue at 0" + lab, residue, 1e-9);
    c.le("phi(u,z) phi(-u,z) = wp(z) - wp(u)" + lab, relation, 1e-9);
    c.le("twisted phi_a^2 = wp - e_a" + lab, twisted, 1e-9);
  }
}

void bracket_criterion(Checks& c, std::uint64_t seed) {
  using namespace obs;
  const Observable X[3] = {spin(1), spin(2), spin(3)};
  const Observable C[2] = {c1(), c2()};
  std::vector<Observable> coords;
  for (int k = 0; k < 6; ++k) coords.push_back(coordinate(k));
  const int triples[][3] = {{0, 3, 4}, {1, 2, 5}, {0, 1, 2}, {3, 4, 5}, {2, 3, 5}};

  for (RealityClass cls : kClasses) {
    double xc = 0.0, table = 0.0, closure = 0.0, c12 = 0.0, jacobi = 0.0;
    const auto pts = sample_onshell(cls, 1000, stream_seed(seed, 300 + static_cast<int>(cls)));
    for (const PhasePoint& pt : pts) {
      const VecX v = flatten(pt);
      for (const auto& xa : X)
        for (const auto& ci : C) xc = std::max(xc, std::abs(canonical_bracket(xa, ci, v)));

      const cplx q0 = pt.q0, q1 = pt.q1, q3 = pt.q3;
      const cplx g[3][3] = {{1.0 - q0 * q0, -q0 * q1, -q0 * q3},
                            {q0 * q1, 1.0 + q1 * q1, q1 * q3},
                            {q0 * q3, q1 * q3, 1.0 + q3 * q3}};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const cplx d = dirac_bracket(coords[i], coords[3 + j], v);
          table = std::max(table, std::abs(d - g[i][j]) / std::max(1.0, std::abs(g[i][j])));
        }
      }

      const SpinVector s = collective_spin(pt);
      closure = std::max({closure, std::abs(dirac_bracket(X[0], X[1], v) + s.X3),
                          std::abs(dirac_bracket(X[1], X[2], v) + s.X1),
                          std::abs(dirac_bracket(X[2], X[0], v) - s.X2)});
      c12 = std::max(c12, std::abs(constraint_brackets(v)[0] + 2.0));

      for (const auto& t : triples) {
        const Observable& f = coords[t[0]];
        const Observable& h = coords[t[1]];
        const Observable& k = coords[t[2]];
        const cplx jac = dirac_bracket(f, bracket_observable(h, k, BracketKind::Dirac), v) +
                         dirac_bracket(h, bracket_observable(k, f, BracketKind::Dirac), v) +
                         dirac_bracket(k, bracket_observable(f, h, BracketKind::Dirac), v);
        jacobi = std::max(jacobi, std::abs(jac));
      }
    }
    const std::string lab = " " + cls_label(cls);
    c.le("{X_a, c_i} canonical" + lab, xc, 1e-12);
    c.le("Dirac table {p_i, q_j}" + lab, table, 1e-12);
    c.le("sl(2) closure of {X_a, X_b}" + lab, closure, 1e-8);
    c.le("|{c1, c2} + 2|" + lab, c12, 1e-12);
    c.le("Dirac Jacobi on coordinate triples" + lab, jacobi, 1e-6);
  }
}

void top_integrability_criterion(Checks& c, std::uint64_t seed) {
  auto rng = make_stream(seed, 400);
  const TopParams J{cplx(uniform(rng, -2, 2), uniform(rng, -1, 1)),
                    cplx(uniform(rng, -2, 2), uniform(rng, -1, 1)),
                    cplx(uniform(rng, -2, 2), uniform(rng, -1, 1)), std::nullopt};
  const Observable h2 = obs::spin_quadratic(1, 1, 1, 0, "H2");
  const Observable h0 = top_hamiltonian_observable(J);
  for (RealityClass cls : kClasses) {
    const ScanResult r = commutativity_scan(h2, h0, cls, 1000, stream_seed(seed, 401));
    c.le("{H2, H0}_D over 1000 points " + cls_label(cls), r.max_abs, 1e-8);
  }

  const TopSpec spec{brisk_params()};
  const SystemState s0 = make_state(brisk_point());
  const auto tr = integrate(spec, s0, IntegratorOptions{});
  const auto rep = conservation_report(tr);
  c.le("H2 relative drift, t in [0,10]", entry_rel(rep, "H2"), 1e-8);
  c.le("H0 relative drift, t in [0,10]", entry_rel(rep, "H0"), 1e-8);
  c.le("max |c1|", rep.max_c1, 1e-9);
  c.le("max |c2|", rep.max_c2, 1e-9);

  const SystemState ref = integrate_final(spec, s0, IntegratorOptions{1.25e-4, 10.0, 0, 1e-10});
  const double dts[3] = {4e-3, 2e-3, 1e-3};
  double lx[3], ly[3];
  for (int j = 0; j < 3; ++j) {
    const SystemState end = integrate_final(spec, s0, IntegratorOptions{dts[j], 10.0, 0, 1e-10});
    lx[j] = std::log(dts[j]);
    ly[j] = std::log((end.y - ref.y).cwiseAbs().maxCoeff());
  }
  const double mx = (lx[0] + lx[1] + lx[2]) / 3, my = (ly[0] + ly[1] + ly[2]) / 3;
  double sxy = 0.0, sxx = 0.0;
  for (int j = 0; j < 3; ++j) {
    sxy += (lx[j] - mx) * (ly[j] - my);
    sxx += (lx[j] - mx) * (lx[j] - mx);
  }
  const double order = sxy / sxx;
  c.ge("fitted RK4 order (lower)", order, 3.6);
  c.le("fitted RK4 order (upper)", order, 4.4);
}

void top_lax_criterion(Checks& c, std::uint64_t seed) {
  for (int t = 0; t < 3; ++t) {
    const cplx tau = kCurves[t].tau;
    const EllipticCurve e(tau);
    const TopParams J = TopParams::from_curve(e);
    const TopLaxCalibration cal = calibrate_top_lax(e);
    const bool same = cal.slot == kTopLax.slot && cal.sign == kTopLax.sign &&
                      cal.i_on_x2 == kTopLax.i_on_x2;
    c.le(std::string("calibration against the fixed constants ") + kCurves[t].label,
         same ? std::max(std::abs(cal.a0 - kTopLax.a0), std::abs(cal.b0 - kTopLax.b0)) : 1.0, 1e-8);

    auto rng = make_stream(seed, 500 + t);
    double residue = 0.0, quasi = 0.0, fit_res = 0.0, coef = 0.0;
    for (int k = 0; k < 20; ++k) {
      const SpinVector X{cplx(uniform(rng, -1, 1), uniform(rng, -1, 1)),
                         cplx(uniform(rng, -1, 1), uniform(rng, -1, 1)),
                         cplx(uniform(rng, -1, 1), uniform(rng, -1, 1))};
      const cplx zr = 1e-4 * std::exp(kI * uniform(rng, 0, 2 * kPi));
      residue = std::max(residue, rel_diff(zr * top_lax(X, zr, e).L, spin_matrix(X)));
      const cplx zz = uniform(rng, 0.05, 0.95) + uniform(rng, 0.05, 0.95) * tau;
      const Mat2 L = top_lax(X, zz, e).L;
      quasi = std::max({quasi, rel_diff(top_lax(X, zz + 1.0, e).L, pauli(3) * L * pauli(3)),
                        rel_diff(top_lax(X, zz + tau, e).L, pauli(1) * L * pauli(1))});
      std::vector<cplx> wps, trs;
      for (int s = 0; s < 5; ++s) {
        const cplx zs = uniform(rng, 0.05, 0.95) + uniform(rng, 0.05, 0.95) * tau;
        wps.push_back(e.wp(zs));
        trs.push_back(trace_sq(top_lax(X, zs, e).L));
      }
      const TraceFit fit = fit_trace_affine(wps, trs);
      fit_res = std::max(fit_res, fit.residual);
      coef = std::max({coef, rel_diff(fit.A, kTopLax.a0 * top_h2(X)),
                       rel_diff(fit.B, kTopLax.b0 * top_energy(X, J))});
    }
    const std::string lab = std::string(" ") + kCurves[t].label;
    c.le("residue z L(z) at |z| = 1e-4" + lab, residue, 1e-3);
    c.le("quasi-periodicity of L" + lab, quasi, 1e-9);
    c.le("affine fit of tr L^2 in wp" + lab, fit_res, 1e-9);
    c.le("fit coefficients vs (a0 H2, b0 H0)" + lab, coef, 1e-9);
  }

  const EllipticCurve e(cplx(0.0, 1.3));
  const TopSpec spec{TopParams::from_curve(e)};
  const auto tr = integrate(spec, make_state(random_onshell(RealityClass::TypeIII, 21, 0)),
                            IntegratorOptions{});
  const auto iso = isospectral_check(
      spec, tr, {0.3 + 0.2 * e.tau(), 0.55 + 0.4 * e.tau(), 0.8 + 0.7 * e.tau()});
  c.le("isospectral drift, tau=1.3i, t in [0,10]", iso.max_drift, 1e-7);
}

void cm_criterion(Checks& c, std::uint64_t seed) {
  const EllipticCurve ei(kI);
  {
    const CmSpec spec{ei, CmVariant::V};
    const auto tr = integrate(spec, make_state(cm_start(CmVariant::V)),
                              IntegratorOptions{1e-3, 5.0, 10, 1e-10});
    const auto rep = conservation_report(tr);
    c.le("V: X+X- relative drift, t in [0,5]", entry_rel(rep, "XpXm"), 1e-8);
    c.le("V: H0 relative drift, t in [0,5]", entry_rel(rep, "H0"), 1e-8);
    c.ge("V: max change of (p, q), t in [0,5]", coord_move(tr, 2), 1e-3);
  }

  double quasi = 0.0;
  for (int t = 0; t < 3; ++t) {
    const cplx tau = kCurves[t].tau;
    const EllipticCurve e(tau);
    for (int k = 0; k < 30; ++k) {
      auto rng = make_stream(seed, 600 + 30 * t + k);
      CMState s;
      s.spin = random_x3_free_spin(RealityClass::ComplexV, rng);
      s.u = cplx(uniform(rng, 0.1, 0.4), uniform(rng, 0.05, 0.3));
      s.v = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
      const cplx eu = std::exp(2.0 * kPi * kI * s.u);
      Mat2 Q = Mat2::Zero();
      Q(0, 0) = eu;
      Q(1, 1) = 1.0 / eu;
      const cplx z = uniform(rng, 0.05, 0.95) + uniform(rng, 0.05, 0.95) * tau;
      const Mat2 L = cm_lax(s, z, e).L;
      quasi = std::max({quasi, rel_diff(cm_lax(s, z + 1.0, e).L, L),
                        rel_diff(cm_lax(s, z + tau, e).L, Q * L * Q.inverse())});
    }
  }
  c.le("twisted quasi-periodicity of the CM Lax matrix", quasi, 1e-9);

  for (CmVariant v : {CmVariant::III, CmVariant::IV}) {
    const auto tr = integrate(CmSpec{ei, v}, make_state(cm_start(v)), IntegratorOptions{});
    const auto rep = conservation_report(tr);
    c.le(to_string(v) + ": H0 relative drift, t in [0,10]", entry_rel(rep, "H0"), 1e-8);
    c.le(to_string(v) + ": X+X- relative drift, t in [0,10]", entry_rel(rep, "XpXm"), 1e-8);
  }
}

void gaudin_criterion(Checks& c, std::uint64_t seed) {
  double cross = 0.0, same = 0.0;
  for (int k = 0; k < 50; ++k) {
    auto rng = make_stream(seed, 700 + k);
    const GaudinState g = random_gaudin_state(RealityClass::ComplexV, 3, rng);
    const VecX x = flatten(g.sites);
    const auto Xs = gaudin_spins(g);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (int i = 1; i <= 3; ++i) {
          for (int j = 1; j <= 3; ++j) {
            const Observable fi = obs::spin(i, a), gj = obs::spin(j, b);
            const cplx br = dirac_bracket(fi, gj, x);
            if (a != b) {
              cross = std::max(cross, std::abs(br));
              continue;
            }
            const SpinVector& S = Xs[a];
            cplx expect = 0.0;
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
  c.le("same-site spin brackets", same, 1e-8);
  c.le("cross-site spin brackets", cross, 1e-8);

  double commute = 0.0, sum2 = 0.0, partial = 0.0;
  for (int k = 0; k < 200; ++k) {
    auto rng = make_stream(seed, 800 + k);
    const GaudinState g = random_gaudin_state(RealityClass::ComplexV, 3, rng);
    const VecX x = flatten(g.sites);
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        const Observable ha = gaudin_observable(g.marks, a, GaudinFlow::H1);
        const Observable hb = gaudin_observable(g.marks, b, GaudinFlow::H1);
        commute = std::max(commute, std::abs(canonical_bracket(ha, hb, x)));
      }
    }
    if (k >= 100) continue;
    auto r2 = make_stream(seed, 1000 + k);
    const auto h2 = gaudin_hamiltonians(random_gaudin_state(RealityClass::ComplexV, 2, r2));
    sum2 = std::max(sum2, std::abs(h2.H1[0] + h2.H1[1]));

    const auto h = gaudin_hamiltonians(g);
    for (int a = 0; a < 3; ++a) {
      // Laurent coefficients of tr L^2 / 2 at x_a from a 16-point circle
      const double r = 1e-3;
      cplx m1 = 0.0, m2 = 0.0;
      for (int j = 0; j < 16; ++j) {
        const cplx w = r * std::exp(2.0 * kPi * kI * (j / 16.0));
        const cplx f = 0.5 * trace_sq(gaudin_lax(g, g.marks[a] + w).L);
        m1 += f * w / 16.0;
        m2 += f * w * w / 16.0;
      }
      partial = std::max({partial, rel_diff(m1, -2.0 * h.H1[a]), rel_diff(m2, h.H2[a])});
    }
  }
  c.le("{H1^a, H1^b} over 200 states, n=3", commute, 1e-7);
  c.le("|H1^1 + H1^2| for n=2", sum2, 0.0);
  c.le("partial fractions of tr L^2 vs (H2^a, H1^a)", partial, 1e-8);

  auto rng = make_stream(44, 0);
  const GaudinState g = random_gaudin_state(RealityClass::TypeIII, 3, rng);
  const GaudinSpec spec{g.marks, {{0, GaudinFlow::H1, 1.0}, {1, GaudinFlow::H2, 0.5}}};
  const auto rep = conservation_report(integrate(spec, make_state(g), IntegratorOptions{}));
  double spin = 0.0;
  for (const auto& e : rep.entries) {
    if (e.name[0] == 'S') spin = std::max(spin, e.max_abs);
  }
  c.le("global spin drift, t in [0,10]", spin, 1e-9);
}

void reality_criterion(Checks& c, std::uint64_t seed) {
  for (RealityClass cls : {RealityClass::TypeIII, RealityClass::TypeIV}) {
    double top = 0.0;
    for (int k = 0; k < 5; ++k) {
      PhasePoint pt = random_onshell(cls, 55, k);
      if (cls == RealityClass::TypeIV) pt = scale_momentum(pt, 0.2 / max_abs(collective_spin(pt)));
      const auto tr = integrate(TopSpec{brisk_params()}, make_state(pt), IntegratorOptions{});
      top = std::max(top, conservation_report(tr).max_reality);
    }
    c.le("top reality residual, 5 orbits, " + cls_label(cls), top, 1e-9);

    auto rng = make_stream(56, static_cast<int>(cls));
    GaudinState g = random_gaudin_state(cls, 4, rng, 1);
    for (auto& pt : g.sites) pt = scale_momentum(pt, 0.2 / std::max(1e-3, max_abs(collective_spin(pt))));
    const GaudinSpec spec{
        g.marks, {{0, GaudinFlow::H1, 1.0}, {2, GaudinFlow::H2, 0.5}, {3, GaudinFlow::H2, 0.5}}};
    const auto tg = integrate(spec, make_state(g), IntegratorOptions{});
    c.le("gaudin reality residual, " + cls_label(cls), conservation_report(tg).max_reality, 1e-9);
  }
  const EllipticCurve ei(kI);
  for (CmVariant v : {CmVariant::III, CmVariant::IV}) {
    const auto tr = integrate(CmSpec{ei, v}, make_state(cm_start(v)), IntegratorOptions{});
    c.le("cm " + to_string(v) + " reality residual", conservation_report(tr).max_reality, 1e-9);
  }

  double sphere = 0.0;
  for (const PhasePoint& pt : sample_onshell(RealityClass::TypeIII, 1000, stream_seed(seed, 850))) {
    sphere = std::max(sphere, std::abs(std::norm(pt.q0) + std::norm(pt.q1) + std::norm(pt.q3) - 1.0));
  }
  c.le("TypeIII q on the unit sphere", sphere, 1e-10);

  double lax3 = 0.0, lax4 = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double x = 0.05 + 0.9 * (k + 0.5) / 50.0;
    for (RealityClass cls : {RealityClass::TypeIII, RealityClass::TypeIV}) {
      const SpinVector X = collective_spin(random_onshell(cls, stream_seed(seed, 860), k));
      const Mat2 L = top_lax(X, x, ei).L;
      const double s = L.cwiseAbs().maxCoeff();
      if (cls == RealityClass::TypeIII) {
        lax3 = std::max(lax3, (L + L.adjoint()).cwiseAbs().maxCoeff() / s);
      } else {
        lax4 = std::max(lax4, (L - L.conjugate()).cwiseAbs().maxCoeff() / s);
      }
    }
  }
  c.le("top L(x) anti-hermitian on the real axis, class III", lax3, 1e-12);
  c.le("top L(x) real on the real axis, class IV", lax4, 1e-12);

  for (RealityClass cls : {RealityClass::TypeIII, RealityClass::TypeIV}) {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      auto rng = make_stream(seed, 870 + 50 * static_cast<int>(cls) + k);
      const GaudinState g = random_gaudin_state(cls, 5, rng, 2);
      const cplx z(0.3, 0.45);
      const Mat2 L = gaudin_lax(g, z).L, Lc = gaudin_lax(g, std::conj(z)).L;
      const Mat2 image = cls == RealityClass::TypeIII ? Mat2(-L.adjoint()) : Mat2(L.conjugate());
      worst = std::max(worst, (Lc - image).cwiseAbs().maxCoeff() / L.cwiseAbs().maxCoeff());
    }
    c.le("gaudin L(conj z) vs involution of L(z), " + cls_label(cls), worst, 1e-12);
  }
}

void quantum_criterion(Checks& c, std::uint64_t seed) {
  double iso = 0.0;
  int mult_fail = 0;
  for (int twice = 1; twice <= 20; ++twice) {
    const double l = twice / 2.0;
    for (double J : {1.0, -0.7, 2.5}) {
      const auto s = quantum_top_spectrum(l, TopParams{J, J, J, std::nullopt});
      const double expect = J * l * (l + 1);
      int hits = 0;
      for (cplx e : s.eigenvalues) {
        const double d = std::abs(e - expect) / std::max(1.0, std::abs(expect));
        iso = std::max(iso, d);
        if (d <= 1e-12) ++hits;
      }
      if (hits != twice + 1 || s.eigenvalues.size() != std::size_t(twice + 1)) ++mult_fail;
    }
  }
  c.le("isotropic spectrum J l(l+1), l = 1/2..10", iso, 1e-12);
  c.le("spins with multiplicity != 2l+1", mult_fail, 0.0);

  auto rng = make_stream(seed, 900);
  const double J1 = uniform(rng, -2, 2), J2 = uniform(rng, -2, 2), J3 = uniform(rng, -2, 2);
  const auto s = quantum_top_spectrum(1.0, TopParams{J1, J2, J3, std::nullopt});
  // Cartesian l = 1 basis: (S_a)_bc = -i eps_abc, so the operator is diagonal.
  std::vector<double> expect = {J2 + J3, J3 + J1, J1 + J2};
  std::sort(expect.begin(), expect.end());
  double aniso = s.eigenvalues.size() == 3 ? 0.0 : 1.0;
  for (std::size_t k = 0; k < std::min<std::size_t>(3, s.eigenvalues.size()); ++k) {
    aniso = std::max(aniso, std::abs(s.eigenvalues[k] - expect[k]) / std::max(1.0, std::abs(expect[k])));
  }
  c.le("l=1 anisotropic spectrum vs {J1+J2, J2+J3, J3+J1}", aniso, 1e-12);
}

const char* kNames[kCriterionCount] = {
    "dimension ledger",   "elliptic identities", "bracket algebra",
    "top integrability",  "top Lax consistency", "spin Calogero-Moser",
    "Gaudin model",       "reality classes",     "quantum top"};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw IndexError("criterion id must be 1..9");
  CriterionResult r;
  r.id = id;
  r.name = kNames[id - 1];
  Checks c{r.checks};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: dims_criterion(c); break;
      case 2: elliptic_criterion(c, seed); break;
      case 3: bracket_criterion(c, seed); break;
      case 4: top_integrability_criterion(c, seed); break;
      case 5: top_lax_criterion(c, seed); break;
      case 6: cm_criterion(c, seed); break;
      case 7: gaudin_criterion(c, seed); break;
      case 8: reality_criterion(c, seed); break;
      case 9: quantum_criterion(c, seed); break;
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CheckReport run_check_suite(std::uint64_t seed) {
  CheckReport rep;
  rep.seed = seed;
  for (int id = 1; id <= kCriterionCount; ++id) rep.criteria.push_back(run_criterion(id, seed));
  return rep;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["version"] = kVersion;
  j["seed"] = r.seed;
  j["pass"] = r.pass();
  Json crit = Json::array();
  for (const auto& c : r.criteria) {
    Json x;
    x["id"] = c.id;
    x["name"] = c.name;
    x["pass"] = c.pass();
    if (!c.error.empty()) x["error"] = c.error;
    Json items = Json::array();
    for (const auto& k : c.checks) {
      Json y;
      y["name"] = k.name;
      if (std::isfinite(k.value)) {
        y["value"] = k.value;
      } else {
        y["value"] = nullptr;
      }
      y["op"] = k.op == CheckOp::Le ? "<=" : ">=";
      y["limit"] = k.limit;
      y["pass"] = k.pass();
      items.push_back(y);
    }
    x["checks"] = items;
    crit.push_back(x);
  }
  j["criteria"] = crit;
  return j;
}

}  // namespace spinhiggs
