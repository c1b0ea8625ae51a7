#pragma once

// Canonical and Dirac brackets for observables on one or several sites.
//
// A state is a flattened vector of 6n complex coordinates, one block
// (p0, p1, p3, q0, q1, q3) per site. The canonical bracket is
//   {f, g} = sum_j (df/dp_j dg/dq_j - df/dq_j dg/dp_j),
// so {p_j, q_k} = delta_jk, and Hamiltonian flow is  df/dt = {H, f}.
// The Dirac bracket removes the per-site second-class pair (c1, c2).

#include <functional>
#include <string>
#include <vector>

#include "spinhiggs/phase_space.hpp"

namespace spinhiggs {

using VecX = Eigen::VectorXcd;

inline constexpr double kFdStep = 1e-6;
inline constexpr double kDiracOnShellTol = 1e-8;
inline constexpr double kDiracSingularTol = 1e-12;

VecX flatten(const PhasePoint& pt);
VecX flatten(const std::vector<PhasePoint>& sites);
PhasePoint site_of(const VecX& x, int site, RealityClass cls = RealityClass::ComplexV);

struct Observable {
  std::string name;
  std::function<cplx(const VecX&)> value;
  // Optional analytic gradient; central differences are used when empty.
  std::function<VecX(const VecX&)> gradient;

  cplx operator()(const VecX& x) const { return value(x); }
  cplx operator()(const PhasePoint& pt) const { return value(flatten(pt)); }
  VecX grad(const VecX& x, double h = kFdStep) const;
};

// Central differences with a real step in each coordinate. For holomorphic
// functions this is the complex derivative.
VecX fd_gradient(const std::function<cplx(const VecX&)>& f, const VecX& x, double h = kFdStep);

cplx canonical_bracket(const VecX& df, const VecX& dg);
cplx canonical_bracket(const Observable& f, const Observable& g, const VecX& x);

// {c1^a, c2^a} per site; -2 on shell.
VecX constraint_brackets(const VecX& x);

// Throws OffShellError when any site violates the constraints beyond
// onshell_tol, SingularError when some |det C_a| < kDiracSingularTol.
cplx dirac_bracket(const Observable& f, const Observable& g, const VecX& x,
                   double onshell_tol = kDiracOnShellTol);
cplx dirac_bracket(const Observable& f, const Observable& g, const PhasePoint& pt,
                   double onshell_tol = kDiracOnShellTol);
// No on-shell check; used when nesting brackets under finite differences.
cplx dirac_bracket_unchecked(const Observable& f, const Observable& g, const VecX& x);

enum class BracketKind { Canonical, Dirac };

// x -> {f, g}(x) as an observable (finite-difference gradient).
Observable bracket_observable(const Observable& f, const Observable& g, BracketKind kind);

// Standard observables, all with analytic gradients.
namespace obs {

Observable coordinate(int coord, int site = 0);
Observable constant(cplx c);
Observable spin(int alpha, int site = 0);
Observable c1(int site = 0);
Observable c2(int site = 0);
Observable casimir(int site = 0);
// (1/2)(w1 X1^2 - w2 X2^2 + w3 X3^2) on one site.
Observable spin_quadratic(cplx w1, cplx w2, cplx w3, int site = 0, std::string name = "");
// Pairing (X_a, X_b) between two sites.
Observable spin_pairing(int site_a, int site_b);

}  // namespace obs

// Gradients of X1, X2, X3 of one site with respect to its own six coordinates.
std::array<Vec6, 3> spin_gradients(const PhasePoint& pt);

}  // namespace spinhiggs
