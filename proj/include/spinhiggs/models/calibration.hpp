#pragma once

// Frozen conventions of the elliptic Lax operators, and the searches that
// re-derive them from the residue and twisted quasi-periodicity conditions.
//
// Top:  L(z) = sum_a s_a c_a X_a phi_{slot[a]}(z) sigma_a, c = (1, i, 1) when
//       i_on_x2, and tr L^2 = a0 H2 wp(z) + b0 H0(J_lax).
// CM:   the coupling X_+ X_- multiplies phi(2u, z) phi(-2u, z); the carrier of
//       the phi(2u, z) term is E21 when plus_on_lower, and
//       tr L^2 = a0 H2 wp(z) + b0 H0 with H0 = v^2/2 + kappa X_+X_- wp(2u).

#include <array>
#include <string>
#include <vector>

#include "spinhiggs/elliptic.hpp"

namespace spinhiggs {

struct TopLaxCalibration {
  std::array<int, 3> slot;  // twisted function index used on sigma_1, sigma_2, sigma_3
  std::array<int, 3> sign;
  bool i_on_x2;
  double a0;
  double b0;
};

inline constexpr TopLaxCalibration kTopLax{{3, 2, 1}, {1, 1, 1}, true, 4.0, -4.0};

struct CmLaxCalibration {
  bool plus_on_lower;
  double kappa;
  double a0;
  double b0;
};

inline constexpr CmLaxCalibration kCmLax{true, -0.5, 4.0, 4.0};

struct TopCandidateScore {
  TopLaxCalibration cal;
  double residue_err;
  double quasi_err;
};

// Scores all 96 candidates (slot permutations x signs x i-factor) on the given
// curve and returns them sorted by total error.
std::vector<TopCandidateScore> score_top_candidates(const EllipticCurve& curve);
// The unique candidate passing both conditions, with (a0, b0) fitted from the
// trace; throws ConvergenceError when none or several pass.
TopLaxCalibration calibrate_top_lax(const EllipticCurve& curve);

CmLaxCalibration calibrate_cm_lax(const EllipticCurve& curve);

std::string describe(const TopLaxCalibration& c);
std::string describe(const CmLaxCalibration& c);

}  // namespace spinhiggs
