#pragma once

// JSON scenario files for the spinhiggs front end.
//
//   {"action": "simulate", "model": "top", "curve": {"tau_re": 0, "tau_im": 1},
//    "class": "III", "seed": 1, "params": {"J": "curve"}, "initial": "random",
//    "integrator": {"dt": 1e-3, "t_end": 10}, "outputs": {"dir": "out"}}
//
// All errors are ValidationError with the path of the offending field.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinhiggs/cli/json_io.hpp"
#include "spinhiggs/flow/integrator.hpp"

namespace spinhiggs {

enum class Action { Simulate, Dims, Check, Spectrum };

std::string to_string(Action a);
Action parse_action(const std::string& s);

struct OutputPaths {
  std::string dir = "spinhiggs_out";
  int csv_stride = 1;
};

struct Scenario {
  Action action = Action::Check;
  std::uint64_t seed = 0;
  RealityClass cls = RealityClass::TypeIII;
  std::optional<EllipticCurve> curve;
  OutputPaths outputs;
  IntegratorOptions integrator;

  // simulate
  std::optional<ModelSpec> model;
  SystemState initial;
  std::string initial_source;  // "random:<seed>" or "explicit"

  // dims
  std::vector<GroupType> types;
  int genus = 1;
  int marked = 1;

  // spectrum
  double l = 1.0;
  TopParams spectrum_params;
};

// Throws ValidationError on malformed JSON too. A seed_override replaces the
// "seed" field before anything seeded is built.
Scenario parse_scenario(const std::string& text,
                        std::optional<std::uint64_t> seed_override = std::nullopt);
Scenario scenario_from_json(const Json& j,
                            std::optional<std::uint64_t> seed_override = std::nullopt);

// Defaults for random CM starts per variant: (u, v) and the spin size cap
// (0 = unscaled).
struct CmRandomDefaults {
  double u;
  double v;
  double spin_cap;
};
CmRandomDefaults cm_random_defaults(CmVariant v);

}  // namespace spinhiggs
