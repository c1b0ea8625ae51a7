#pragma once

#include <vector>

#include "spinhiggs/flow/system.hpp"

namespace spinhiggs {

struct IntegratorOptions {
  double dt = 1e-3;
  double t_end = 10.0;
  int project_every = 10;  // 0 disables projection
  double tol = 1e-10;

  void validate() const;
};

struct AuditRecord {
  double c1_abs;
  double c2_abs;
  double reality;
  std::vector<cplx> observables;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<SystemState> states;
  std::vector<AuditRecord> audit;
  std::vector<std::string> observable_names;
};

// Classical RK4 with step t_end / ceil(t_end / dt). Sites are projected back
// on shell every project_every steps; the audit covers every stored state.
// Throws OffShellError when the initial state is off shell beyond opts.tol,
// ValidationError when it breaks its reality class, PoleError when the field
// stops being finite.
Trajectory integrate(const ModelSpec& model, const SystemState& init,
                     const IntegratorOptions& opts);

// Final state only, no audit.
SystemState integrate_final(const ModelSpec& model, const SystemState& init,
                            const IntegratorOptions& opts);

}  // namespace spinhiggs
