#pragma once

// Spectrum of J1 S1^2 + J2 S2^2 + J3 S3^2 on the spin-l representation.

#include <vector>

#include "spinhiggs/models/top.hpp"

namespace spinhiggs {

inline constexpr double kMaxSpin = 200.0;

struct QuantumSpectrum {
  double l;
  std::vector<cplx> eigenvalues;  // ascending by real part, then imaginary part
  bool hermitian;                 // all J real
};

// Standard spin-l matrices in the basis m = l, l-1, ..., -l.
std::array<Eigen::MatrixXcd, 3> spin_matrices(double l);

// l must be a non-negative half-integer no larger than kMaxSpin.
QuantumSpectrum quantum_top_spectrum(double l, const TopParams& params);

}  // namespace spinhiggs
