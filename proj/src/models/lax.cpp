#include "spinhiggs/models/lax.hpp"

namespace spinhiggs {

TraceFit fit_trace_affine(const std::vector<cplx>& wp_values, const std::vector<cplx>& traces) {
  if (wp_values.size() != traces.size() || wp_values.size() < 2) {
    throw ValidationError("fit_trace_affine: need at least two matching samples");
  }
  const auto n = static_cast<Eigen::Index>(wp_values.size());
  Eigen::MatrixXcd M(n, 2);
  Eigen::VectorXcd y(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    M(k, 0) = wp_values[k];
    M(k, 1) = 1.0;
    y[k] = traces[k];
  }
  const Eigen::Vector2cd c = M.colPivHouseholderQr().solve(y);
  const double scale = y.cwiseAbs().maxCoeff();
  const double res = (M * c - y).cwiseAbs().maxCoeff();
  return {c[0], c[1], scale == 0.0 ? res : res / scale};
}

}  // namespace spinhiggs
