#pragma once

#include <vector>

#include "spinhiggs/flow/integrator.hpp"

namespace spinhiggs {

struct DriftEntry {
  std::string name;
  cplx initial;
  double max_abs;
  double max_rel;  // max_abs / |initial|, or max_abs when initial is 0
};

struct ConservationReport {
  std::vector<DriftEntry> entries;
  double max_c1;
  double max_c2;
  double max_reality;
};

// Drift of the audited observables plus any extra ones evaluated on the states.
ConservationReport conservation_report(const Trajectory& traj,
                                       const std::vector<StateObservable>& extra = {});

DriftEntry drift_of(const std::string& name, const std::vector<cplx>& values);

struct IsospectralEntry {
  cplx z;
  double trace_drift;  // relative drift of tr L^2(z)
  double det_drift;    // relative drift of det L(z)
};

struct IsospectralReport {
  std::vector<IsospectralEntry> entries;
  double max_drift;
};

IsospectralReport isospectral_check(const ModelSpec& model, const Trajectory& traj,
                                    const std::vector<cplx>& z_samples);

}  // namespace spinhiggs
