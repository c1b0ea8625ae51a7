#include "spinhiggs/flow/integrator.hpp"

#include <cmath>

namespace spinhiggs {

void IntegratorOptions::validate() const {
  if (!(dt > 0.0)) throw ValidationError("integrator.dt must be positive");
  if (!(t_end > 0.0)) throw ValidationError("integrator.t_end must be positive");
  if (dt > t_end) throw ValidationError("integrator.dt must not exceed integrator.t_end");
  if (project_every < 0) throw ValidationError("integrator.project_every must be >= 0");
  if (!(tol > 0.0) || tol > 1e-4) throw ValidationError("integrator.tol must lie in (0, 1e-4]");
}

namespace {

void check_finite(const VecX& v) {
  if (!v.allFinite()) throw PoleError("vector field is not finite (pole encountered)");
}

VecX rk4_step(const ModelSpec& m, const VecX& y, double h) {
  const VecX k1 = vector_field(m, y);
  check_finite(k1);
  const VecX k2 = vector_field(m, y + (0.5 * h) * k1);
  const VecX k3 = vector_field(m, y + (0.5 * h) * k2);
  const VecX k4 = vector_field(m, y + h * k3);
  VecX out = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  check_finite(out);
  return out;
}

void project_sites(const ModelSpec& m, SystemState& s, double tol) {
  const int off = site_offset(m);
  for (int k = 0; k < site_count(m, s); ++k) {
    const PhasePoint pt = project_onshell(site(m, s, k), tol);
    s.y.segment<6>(off + 6 * k) = pt.coords();
  }
}

AuditRecord audit_of(const ModelSpec& m, const SystemState& s,
                     const std::vector<StateObservable>& obs) {
  AuditRecord r;
  max_constraint(m, s, &r.c1_abs, &r.c2_abs);
  r.reality = reality_of(m, s);
  r.observables.reserve(obs.size());
  for (const auto& o : obs) r.observables.push_back(o.value(s.y));
  return r;
}

long step_count(const IntegratorOptions& opts) {
  return static_cast<long>(std::ceil(opts.t_end / opts.dt - 1e-9));
}

void check_initial(const ModelSpec& model, const SystemState& init, const IntegratorOptions& opts) {
  opts.validate();
  validate(model, init);
  const double v = max_constraint(model, init);
  if (v > opts.tol) {
    throw OffShellError("initial state is off shell by " + std::to_string(v));
  }
  const double r = reality_of(model, init);
  if (r > opts.tol) {
    throw ValidationError("initial state violates its reality class " + to_string(init.cls) +
                          " by " + std::to_string(r));
  }
}

double projection_tol(const IntegratorOptions& opts) { return std::max(1e-14, 1e-2 * opts.tol); }

}  // namespace

Trajectory integrate(const ModelSpec& model, const SystemState& init,
                     const IntegratorOptions& opts) {
  check_initial(model, init, opts);
  const long n = step_count(opts);
  const double h = opts.t_end / static_cast<double>(n);
  const auto obs = default_observables(model, init);

  Trajectory tr;
  for (const auto& o : obs) tr.observable_names.push_back(o.name);
  tr.times.reserve(n + 1);
  tr.states.reserve(n + 1);
  tr.audit.reserve(n + 1);
  SystemState s = init;
  tr.times.push_back(0.0);
  tr.states.push_back(s);
  tr.audit.push_back(audit_of(model, s, obs));
  for (long k = 1; k <= n; ++k) {
    s.y = rk4_step(model, s.y, h);
    if (opts.project_every > 0 && k % opts.project_every == 0) {
      project_sites(model, s, projection_tol(opts));
    }
    tr.times.push_back(static_cast<double>(k) * h);
    tr.states.push_back(s);
    tr.audit.push_back(audit_of(model, s, obs));
  }
  return tr;
}

SystemState integrate_final(const ModelSpec& model, const SystemState& init,
                            const IntegratorOptions& opts) {
  check_initial(model, init, opts);
  const long n = step_count(opts);
  const double h = opts.t_end / static_cast<double>(n);
  SystemState s = init;
  for (long k = 1; k <= n; ++k) {
    s.y = rk4_step(model, s.y, h);
    if (opts.project_every > 0 && k % opts.project_every == 0) {
      project_sites(model, s, projection_tol(opts));
    }
  }
  return s;
}

}  // namespace spinhiggs
