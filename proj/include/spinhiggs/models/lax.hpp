#pragma once

#include <vector>

#include "spinhiggs/common.hpp"

namespace spinhiggs {

struct LaxSample {
  cplx z;
  Mat2 L;
};

// tr L^2 = A wp + B fitted by least squares over the samples.
struct TraceFit {
  cplx A;
  cplx B;
  double residual;  // max |tr L^2 - (A wp + B)| / max |tr L^2|
};

TraceFit fit_trace_affine(const std::vector<cplx>& wp_values, const std::vector<cplx>& traces);

inline cplx trace_sq(const Mat2& L) { return (L * L).trace(); }

}  // namespace spinhiggs
