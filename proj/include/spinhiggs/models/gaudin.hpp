#pragma once

// Rational Gaudin model on n sites with marked points x_a.
//
//   L(z) = sum_a spin_matrix(X_a) / (z - x_a)
//   H2^a = (X_a, X_a),  H1^a = sum_{b != a} (X_a, X_b) / (x_b - x_a)
//
// Flows act on the flattened 6n state (flatten(sites)). The matrix equations
// below reproduce the canonical flows of H2^a and H1^a exactly, including off
// shell; sym(M) = (M + M^T) / 2, w_ab = 1 / (x_b - x_a), X0 = c2:
//   H2^a: dQ_a = 2 (Q P Q - X0 Q),  dP_a = -2 (P Q P - X0 P)
//   H1^a: dQ_b = w_ab (sym(Q_a P_a Q_b) - X0_a Q_b),
//         dP_b = -w_ab (sym(P_b Q_a P_a) - X0_a P_b)               (b != a)
//         dQ_a = sum_b w_ab (sym(Q_b P_b Q_a) - X0_b Q_a),
//         dP_a = -sum_b w_ab (sym(P_a Q_b P_b) - X0_b P_a)

#include <random>
#include <vector>

#include "spinhiggs/brackets.hpp"
#include "spinhiggs/models/lax.hpp"

namespace spinhiggs {

inline constexpr double kMarkSeparation = 1e-9;

struct GaudinState {
  std::vector<PhasePoint> sites;
  std::vector<cplx> marks;
  RealityClass cls = RealityClass::ComplexV;
};

enum class GaudinFlow { H2, H1 };

std::string to_string(GaudinFlow f);
GaudinFlow parse_gaudin_flow(const std::string& s);

// Throws ValidationError on size mismatch or coincident marks.
void validate_marks(const std::vector<cplx>& marks);
void validate_gaudin(const GaudinState& s);

std::vector<SpinVector> gaudin_spins(const GaudinState& s);
SpinVector gaudin_total_spin(const GaudinState& s);

struct GaudinHamiltonians {
  std::vector<cplx> H2;
  std::vector<cplx> H1;
};

GaudinHamiltonians gaudin_hamiltonians(const GaudinState& s);

LaxSample gaudin_lax(const GaudinState& s, cplx z);

VecX gaudin_vector_field(const GaudinState& s, int a, GaudinFlow which);
VecX gaudin_vector_field_raw(const VecX& x, const std::vector<cplx>& marks, int a,
                             GaudinFlow which);

Observable gaudin_observable(const std::vector<cplx>& marks, int a, GaudinFlow which);

// n sites with real marks, except that the last 2 * conj_pairs marks come in
// complex-conjugate pairs whose sites are related by the reality involution.
// For ComplexV the marks are complex and conj_pairs is ignored.
GaudinState random_gaudin_state(RealityClass cls, int n, std::mt19937_64& rng,
                                int conj_pairs = 0);

// Real-mark sites: reality_residual; conjugate pairs: distance between one
// site and the involution of its partner.
double gaudin_reality_residual(const GaudinState& s);

}  // namespace spinhiggs
