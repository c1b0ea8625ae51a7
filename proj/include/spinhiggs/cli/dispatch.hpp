#pragma once

// Runs a parsed scenario and writes its outputs under Scenario::outputs.dir:
//   simulate  trajectory.csv, conservation.json
//   dims      dims.json
//   check     check.json
//   spectrum  spectrum.json
// plus manifest.json for every action.

#include <ostream>
#include <string>
#include <vector>

#include "spinhiggs/cli/scenario.hpp"

namespace spinhiggs {

struct DispatchResult {
  int exit_code = 0;  // 0 ok, 2 when a check fails
  Json report;        // the action's main JSON document
  std::vector<std::string> files;
  std::string summary;  // human-readable, may contain timings
};

DispatchResult dispatch(const Scenario& s);

// Header: t, <coord>_re, <coord>_im, ..., c1_abs, c2_abs, reality_residual,
// <observable>_re, <observable>_im, ... Rows every `stride` steps; the last
// step is always written.
void write_trajectory_csv(const ModelSpec& model, const Trajectory& traj, std::ostream& out,
                          int stride = 1);

Json dims_json(const std::vector<GroupType>& types, int genus, int marked);
Json manifest_json(const Scenario& s, const std::vector<std::string>& files);

// Sample points for the isospectral audit; empty when the model has no Lax matrix.
std::vector<cplx> isospectral_samples(const ModelSpec& model);

}  // namespace spinhiggs
