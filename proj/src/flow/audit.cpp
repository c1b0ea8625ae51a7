#include "spinhiggs/flow/audit.hpp"

namespace spinhiggs {

DriftEntry drift_of(const std::string& name, const std::vector<cplx>& values) {
  DriftEntry e{name, values.empty() ? cplx(0.0) : values.front(), 0.0, 0.0};
  for (cplx v : values) e.max_abs = std::max(e.max_abs, std::abs(v - e.initial));
  const double s = std::abs(e.initial);
  e.max_rel = s > 0.0 ? e.max_abs / s : e.max_abs;
  return e;
}

ConservationReport conservation_report(const Trajectory& traj,
                                       const std::vector<StateObservable>& extra) {
  ConservationReport r{{}, 0.0, 0.0, 0.0};
  for (const auto& a : traj.audit) {
    r.max_c1 = std::max(r.max_c1, a.c1_abs);
    r.max_c2 = std::max(r.max_c2, a.c2_abs);
    r.max_reality = std::max(r.max_reality, a.reality);
  }
  for (std::size_t k = 0; k < traj.observable_names.size(); ++k) {
    std::vector<cplx> v;
    v.reserve(traj.audit.size());
    for (const auto& a : traj.audit) v.push_back(a.observables[k]);
    r.entries.push_back(drift_of(traj.observable_names[k], v));
  }
  for (const auto& o : extra) {
    std::vector<cplx> v;
    v.reserve(traj.states.size());
    for (const auto& s : traj.states) v.push_back(o.value(s.y));
    r.entries.push_back(drift_of(o.name, v));
  }
  return r;
}

IsospectralReport isospectral_check(const ModelSpec& model, const Trajectory& traj,
                                    const std::vector<cplx>& z_samples) {
  IsospectralReport r{{}, 0.0};
  for (cplx z : z_samples) {
    std::vector<cplx> tr, det;
    tr.reserve(traj.states.size());
    det.reserve(traj.states.size());
    for (const auto& s : traj.states) {
      const Mat2 L = lax_matrix(model, s.y, z);
      tr.push_back(trace_sq(L));
      det.push_back(L.determinant());
    }
    const IsospectralEntry e{z, drift_of("tr", tr).max_rel, drift_of("det", det).max_rel};
    r.max_drift = std::max({r.max_drift, e.trace_drift, e.det_drift});
    r.entries.push_back(e);
  }
  return r;
}

}  // namespace spinhiggs
