#include "spinhiggs/models/calibration.hpp"

#include <algorithm>
#include <sstream>

#include "spinhiggs/models/cm.hpp"
#include "spinhiggs/models/top.hpp"

namespace spinhiggs {

namespace {

// Generic probe data; nothing special about these values.
const SpinVector kProbeX{{0.7, 0.2}, {-0.4, 0.9}, {1.1, -0.3}};
constexpr double kResidueZ = 1e-4;
constexpr double kResidueTol = 1e-3;
constexpr double kQuasiTol = 1e-9;

std::vector<cplx> probe_points(const EllipticCurve& c) {
  const cplx t = c.tau();
  return {0.23 + 0.17 * t, 0.61 + 0.33 * t, 0.12 + 0.71 * t, 0.44 + 0.52 * t, 0.83 + 0.08 * t};
}

}  // namespace

std::vector<TopCandidateScore> score_top_candidates(const EllipticCurve& curve) {
  std::array<int, 3> perm{1, 2, 3};
  std::vector<TopCandidateScore> out;
  const Mat2 X = spin_matrix(kProbeX);
  const Mat2& s1 = pauli(1);
  const Mat2& s3 = pauli(3);
  const auto zs = probe_points(curve);
  do {
    for (int signs = 0; signs < 8; ++signs) {
      for (int with_i = 0; with_i < 2; ++with_i) {
        TopLaxCalibration cal{perm,
                              {signs & 1 ? -1 : 1, signs & 2 ? -1 : 1, signs & 4 ? -1 : 1},
                              with_i == 1,
                              0.0,
                              0.0};
        const cplx zr = kResidueZ * std::exp(kI * 0.3);
        const double res = rel_diff(zr * top_lax(kProbeX, zr, curve, cal).L, X);
        double quasi = 0.0;
        for (cplx z : zs) {
          const Mat2 L = top_lax(kProbeX, z, curve, cal).L;
          quasi = std::max(quasi, rel_diff(top_lax(kProbeX, z + 1.0, curve, cal).L, s3 * L * s3));
          quasi = std::max(quasi,
                           rel_diff(top_lax(kProbeX, z + curve.tau(), curve, cal).L, s1 * L * s1));
        }
        out.push_back({cal, res, quasi});
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.residue_err + a.quasi_err < b.residue_err + b.quasi_err;
  });
  return out;
}

TopLaxCalibration calibrate_top_lax(const EllipticCurve& curve) {
  const auto scores = score_top_candidates(curve);
  std::vector<TopLaxCalibration> passing;
  for (const auto& s : scores) {
    if (s.residue_err <= kResidueTol && s.quasi_err <= kQuasiTol) passing.push_back(s.cal);
  }
  if (passing.size() != 1) {
    throw ConvergenceError("calibrate_top_lax: " + std::to_string(passing.size()) +
                           " candidates pass, expected exactly one");
  }
  TopLaxCalibration cal = passing.front();
  const HalfPeriodValues e = curve.half_periods();
  TopParams jp;
  jp.J1 = e[cal.slot[0]];
  jp.J2 = e[cal.slot[1]];
  jp.J3 = e[cal.slot[2]];
  std::vector<cplx> wps, trs;
  for (cplx z : probe_points(curve)) {
    wps.push_back(curve.wp(z));
    trs.push_back(trace_sq(top_lax(kProbeX, z, curve, cal).L));
  }
  const TraceFit fit = fit_trace_affine(wps, trs);
  cal.a0 = (fit.A / top_h2(kProbeX)).real();
  cal.b0 = (fit.B / top_energy(kProbeX, jp)).real();
  return cal;
}

CmLaxCalibration calibrate_cm_lax(const EllipticCurve& curve) {
  // Spin with X+ X- != 0 and X3 = 0.
  PhasePoint spin{0.0, 1.2, 0.0, 1.0, 0.0, 0.0};
  CMState st{{0.4, 0.1}, {0.17, 0.06}, spin};
  const cplx u = st.u;
  Mat2 Q = Mat2::Zero();
  Q(0, 0) = std::exp(2.0 * kPi * kI * u);
  Q(1, 1) = std::exp(-2.0 * kPi * kI * u);
  const Mat2 Qi = Q.inverse();

  std::vector<CmLaxCalibration> passing;
  for (bool lower : {false, true}) {
    CmLaxCalibration cal{lower, 0.0, 0.0, 0.0};
    double quasi = 0.0;
    for (cplx z : probe_points(curve)) {
      const Mat2 L = cm_lax(st, z, curve, cal).L;
      quasi = std::max(quasi, rel_diff(cm_lax(st, z + 1.0, curve, cal).L, L));
      quasi = std::max(quasi, rel_diff(cm_lax(st, z + curve.tau(), curve, cal).L, Q * L * Qi));
    }
    if (quasi <= kQuasiTol) passing.push_back(cal);
  }
  if (passing.size() != 1) {
    throw ConvergenceError("calibrate_cm_lax: " + std::to_string(passing.size()) +
                           " carrier choices pass, expected exactly one");
  }
  CmLaxCalibration cal = passing.front();
  std::vector<cplx> wps, trs;
  for (cplx z : probe_points(curve)) {
    wps.push_back(curve.wp(z));
    trs.push_back(trace_sq(cm_lax(st, z, curve, cal).L));
  }
  const TraceFit fit = fit_trace_affine(wps, trs);
  const SpinVector X = collective_spin(spin);
  const cplx c = X.plus() * X.minus();
  cal.a0 = (fit.A / (0.5 * c)).real();
  // The v^2 / 2 term of H0 appears as 2 v^2 in the trace, which fixes b0.
  cal.b0 = 4.0;
  cal.kappa = ((fit.B - 2.0 * st.v * st.v) / (cal.b0 * c * curve.wp(2.0 * u))).real();
  return cal;
}

std::string describe(const TopLaxCalibration& c) {
  std::ostringstream os;
  os << "slot=(" << c.slot[0] << "," << c.slot[1] << "," << c.slot[2] << ") sign=(" << c.sign[0]
     << "," << c.sign[1] << "," << c.sign[2] << ") i_on_x2=" << (c.i_on_x2 ? "true" : "false")
     << " a0=" << c.a0 << " b0=" << c.b0;
  return os.str();
}

std::string describe(const CmLaxCalibration& c) {
  std::ostringstream os;
  os << "plus_on_lower=" << (c.plus_on_lower ? "true" : "false") << " kappa=" << c.kappa
     << " a0=" << c.a0 << " b0=" << c.b0;
  return os.str();
}

}  // namespace spinhiggs
