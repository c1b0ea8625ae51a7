#pragma once

// Seeded scans over random on-shell points. Each kernel has an OpenMP version
// and a serial reference; both give identical results for the same seed.

#include <cstdint>
#include <vector>

#include "spinhiggs/flow/integrator.hpp"

namespace spinhiggs {

struct ScanResult {
  double max_abs;
  int argmax;  // index of the worst point
  int n_points;
};

// max |{f, g}| over n_points states of n_sites sites each. One site uses the
// Dirac bracket, several sites the canonical one. Point k, site s is drawn
// from stream k * n_sites + s.
ScanResult commutativity_scan(const Observable& f, const Observable& g, RealityClass cls,
                              int n_points, std::uint64_t seed, int n_sites = 1);
ScanResult commutativity_scan_serial(const Observable& f, const Observable& g, RealityClass cls,
                                     int n_points, std::uint64_t seed, int n_sites = 1);

// Relative H0 drift of n top trajectories started from seeded points.
std::vector<double> ensemble_energy_drift(const TopParams& params, RealityClass cls, int n,
                                          std::uint64_t seed, const IntegratorOptions& opts);
std::vector<double> ensemble_energy_drift_serial(const TopParams& params, RealityClass cls,
                                                 int n, std::uint64_t seed,
                                                 const IntegratorOptions& opts);

}  // namespace spinhiggs
