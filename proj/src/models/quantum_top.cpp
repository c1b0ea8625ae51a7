#include "spinhiggs/models/quantum_top.hpp"

#include <algorithm>
#include <cmath>

namespace spinhiggs {

namespace {

int dimension_for(double l) {
  const double twice = 2.0 * l;
  if (!(l >= 0.0) || l > kMaxSpin || std::abs(twice - std::round(twice)) > 1e-12) {
    throw ValidationError("spin l must be a half-integer in [0, " + std::to_string(kMaxSpin) +
                          "], got " + std::to_string(l));
  }
  return static_cast<int>(std::round(twice)) + 1;
}

}  // namespace

std::array<Eigen::MatrixXcd, 3> spin_matrices(double l) {
  const int d = dimension_for(l);
  Eigen::MatrixXcd Sp = Eigen::MatrixXcd::Zero(d, d), S3 = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = l - k;
    S3(k, k) = m;
    // S+ |m> = sqrt(l(l+1) - m(m+1)) |m+1>, and |m+1> is row k-1
    if (k > 0) Sp(k - 1, k) = std::sqrt(l * (l + 1.0) - m * (m + 1.0));
  }
  const Eigen::MatrixXcd Sm = Sp.adjoint();
  return {0.5 * (Sp + Sm), (Sp - Sm) / (2.0 * kI), S3};
}

QuantumSpectrum quantum_top_spectrum(double l, const TopParams& p) {
  const auto S = spin_matrices(l);
  const Eigen::MatrixXcd H = p.J1 * S[0] * S[0] + p.J2 * S[1] * S[1] + p.J3 * S[2] * S[2];
  QuantumSpectrum out;
  out.l = l;
  out.hermitian = p.J1.imag() == 0.0 && p.J2.imag() == 0.0 && p.J3.imag() == 0.0;
  if (out.hermitian) {
    // S1^2, S2^2, S3^2 are real symmetric in this basis.
    const Eigen::MatrixXd Hr = H.real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Hr, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("quantum_top_spectrum: solver failed");
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      out.eigenvalues.emplace_back(es.eigenvalues()[k], 0.0);
    }
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(H, false);
    if (es.info() != Eigen::Success) throw ConvergenceError("quantum_top_spectrum: solver failed");
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      out.eigenvalues.push_back(es.eigenvalues()[k]);
    }
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace spinhiggs
