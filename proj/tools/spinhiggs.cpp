// spinhiggs <action> [--config FILE | flags]
//
// Flags overlay the config file field by field. The seed comes from --seed,
// else SPINHIGGS_SEED, else the config. Exit status: 0 ok, 1 validation
// error, 2 numerical failure or a failing check.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spinhiggs/cli/dispatch.hpp"

using namespace spinhiggs;

namespace {

Json read_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("config: cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw ValidationError("config: malformed JSON in " + path + ": " + e.what());
  }
}

Json number_list(const std::string& text, const char* flag) {
  Json out = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError(std::string(flag) + ": not a number: '" + item + "'");
    }
  }
  return out;
}

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("SPINHIGGS_SEED");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || *s == '-') throw ValidationError("SPINHIGGS_SEED: not a non-negative integer");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinhiggs: spin Higgs bundle models, dimension ledger and invariant checks"};
  std::string action, config, model, cls, variant, J, tau, marks, out, initial;
  std::vector<std::string> types;
  std::optional<std::int64_t> seed, genus, marked, stride;
  std::optional<double> l, dt, t_end, tol;

  app.add_option("action", action, "simulate, dims, check or spectrum")->required();
  app.add_option("--config", config, "JSON scenario file");
  app.add_option("--model", model, "top, cm or gaudin");
  app.add_option("--class", cls, "reality class V, III or IV");
  app.add_option("--variant", variant, "cm variant V, III or IV");
  app.add_option("--tau", tau, "curve modulus as re,im");
  app.add_option("--J", J, "J1,J2,J3 or 'curve'");
  app.add_option("--marks", marks, "real Gaudin marks, comma separated");
  app.add_option("--initial", initial, "random or random:<seed>");
  app.add_option("--type", types, "group types for dims, e.g. A1")->delimiter(',');
  app.add_option("--genus", genus);
  app.add_option("--marked", marked);
  app.add_option("--l", l, "spin for spectrum");
  app.add_option("--seed", seed);
  app.add_option("--dt", dt);
  app.add_option("--t-end", t_end);
  app.add_option("--tol", tol);
  app.add_option("--csv-stride", stride);
  app.add_option("--out", out, "output directory");
  CLI11_PARSE(app, argc, argv);

  try {
    Json j = config.empty() ? Json::object() : read_config(config);
    if (!j.is_object()) throw ValidationError("config: expected a JSON object");
    j["action"] = action;
    auto section = [&](const char* key) -> Json& {
      if (!j.contains(key)) j[key] = Json::object();
      return j[key];
    };
    if (!model.empty()) j["model"] = model;
    if (!cls.empty()) j["class"] = cls;
    if (!variant.empty()) section("params")["variant"] = variant;
    if (!tau.empty()) {
      const Json t = number_list(tau, "--tau");
      if (t.size() != 2) throw ValidationError("--tau: expected re,im");
      j["curve"] = {{"tau_re", t[0]}, {"tau_im", t[1]}};
    }
    if (!J.empty()) section("params")["J"] = J == "curve" ? Json("curve") : number_list(J, "--J");
    if (!marks.empty()) section("params")["marks"] = number_list(marks, "--marks");
    if (!initial.empty()) j["initial"] = initial;
    if (!types.empty()) section("params")["types"] = types;
    if (genus) section("params")["genus"] = *genus;
    if (marked) section("params")["marked"] = *marked;
    if (l) section("params")["l"] = *l;
    if (dt) section("integrator")["dt"] = *dt;
    if (t_end) section("integrator")["t_end"] = *t_end;
    if (tol) section("integrator")["tol"] = *tol;
    if (stride) section("outputs")["csv_stride"] = *stride;
    if (!out.empty()) section("outputs")["dir"] = out;

    std::optional<std::uint64_t> override_seed = env_seed();
    if (seed) {
      if (*seed < 0) throw ValidationError("--seed: must be non-negative");
      override_seed = static_cast<std::uint64_t>(*seed);
    }

    const Scenario s = scenario_from_json(j, override_seed);
    const DispatchResult r = dispatch(s);
    std::cout << dump(r.report);
    std::cerr << r.summary;
    std::cerr << "wrote";
    for (const auto& f : r.files) std::cerr << " " << s.outputs.dir << "/" << f;
    std::cerr << "\n";
    return r.exit_code;
  } catch (const ValidationError& e) {
    std::cerr << "spinhiggs: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "spinhiggs: " << e.what() << "\n";
    return 2;
  }
}
