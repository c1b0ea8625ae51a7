#include "spinhiggs/flow/scan.hpp"

#include <exception>

#include "spinhiggs/flow/sampling.hpp"

namespace spinhiggs {

namespace {

VecX scan_point(RealityClass cls, std::uint64_t seed, int k, int n_sites) {
  std::vector<PhasePoint> sites;
  sites.reserve(n_sites);
  for (int s = 0; s < n_sites; ++s) {
    sites.push_back(random_onshell(cls, seed, static_cast<std::uint64_t>(k) * n_sites + s));
  }
  return flatten(sites);
}

double bracket_at(const Observable& f, const Observable& g, const VecX& x, int n_sites) {
  if (n_sites == 1) return std::abs(dirac_bracket(f, g, x));
  return std::abs(canonical_bracket(f, g, x));
}

void check_args(int n_points, int n_sites) {
  if (n_points < 1) throw ValidationError("commutativity_scan: n_points must be >= 1");
  if (n_sites < 1) throw ValidationError("commutativity_scan: n_sites must be >= 1");
}

double member_drift(const TopParams& params, RealityClass cls, std::uint64_t seed, int k,
                    const IntegratorOptions& opts) {
  const PhasePoint pt = random_onshell(cls, seed, k);
  const TopSpec spec{params};
  const SystemState end = integrate_final(spec, make_state(pt), opts);
  const cplx h0 = top_energy(collective_spin(pt), params);
  const cplx h1 = top_energy(collective_spin(PhasePoint::from_coords(end.y, cls)), params);
  return rel_diff(h1, h0);
}

// Exceptions must not escape an OpenMP region; the first one is rethrown.
template <class F>
void parallel_for(int n, F&& body) {
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < n; ++k) {
    try {
      body(k);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

ScanResult commutativity_scan_serial(const Observable& f, const Observable& g, RealityClass cls,
                                     int n_points, std::uint64_t seed, int n_sites) {
  check_args(n_points, n_sites);
  ScanResult r{0.0, 0, n_points};
  for (int k = 0; k < n_points; ++k) {
    const double v = bracket_at(f, g, scan_point(cls, seed, k, n_sites), n_sites);
    if (v > r.max_abs) {
      r.max_abs = v;
      r.argmax = k;
    }
  }
  return r;
}

ScanResult commutativity_scan(const Observable& f, const Observable& g, RealityClass cls,
                              int n_points, std::uint64_t seed, int n_sites) {
  check_args(n_points, n_sites);
  std::vector<double> vals(n_points);
  parallel_for(n_points,
               [&](int k) { vals[k] = bracket_at(f, g, scan_point(cls, seed, k, n_sites), n_sites); });
  ScanResult r{0.0, 0, n_points};
  for (int k = 0; k < n_points; ++k) {
    if (vals[k] > r.max_abs) {
      r.max_abs = vals[k];
      r.argmax = k;
    }
  }
  return r;
}

std::vector<double> ensemble_energy_drift_serial(const TopParams& params, RealityClass cls,
                                                 int n, std::uint64_t seed,
                                                 const IntegratorOptions& opts) {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = member_drift(params, cls, seed, k, opts);
  return out;
}

std::vector<double> ensemble_energy_drift(const TopParams& params, RealityClass cls, int n,
                                          std::uint64_t seed, const IntegratorOptions& opts) {
  std::vector<double> out(n);
  parallel_for(n, [&](int k) { out[k] = member_drift(params, cls, seed, k, opts); });
  return out;
}

}  // namespace spinhiggs
