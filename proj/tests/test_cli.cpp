#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spinhiggs/cli/check.hpp"
#include "spinhiggs/cli/dispatch.hpp"
#include "spinhiggs/cli/json_io.hpp"
#include "spinhiggs/cli/scenario.hpp"

using namespace spinhiggs;
namespace fs = std::filesystem;

namespace {

std::string validation_message(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::size_t field_count(const std::string& line) {
  return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("spinhiggs_test_cli_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("minimal top scenario gets the defaults") {
  const Scenario s = parse_scenario(
      R"({"action": "simulate", "model": "top", "curve": {"tau_re": 0, "tau_im": 1}})");
  CHECK(s.action == Action::Simulate);
  CHECK(s.integrator.dt == 1e-3);
  CHECK(s.integrator.t_end == 10.0);
  CHECK(s.integrator.tol == 1e-10);
  CHECK(s.integrator.project_every == 10);
  CHECK(s.cls == RealityClass::TypeIII);
  REQUIRE(s.model);
  REQUIRE(s.curve);
  CHECK(std::holds_alternative<TopSpec>(*s.model));
  // J defaults to the curve when one is given
  CHECK(std::get<TopSpec>(*s.model).params.curve.has_value());
  CHECK(s.initial_source == "random:0");
  CHECK(constraint_violation(site(*s.model, s.initial, 0)) < 1e-12);
}

TEST_CASE("validation errors carry the field path") {
  CHECK(validation_message(R"({"action": "simulate", "model": "top", "curve": {"tau_im": -1}})")
            .find("curve.tau_im") != std::string::npos);
  CHECK(validation_message(R"({"action": "simulate", "model": "gaudin", "params": {"marks": [0, 0]}})")
            .find("coincident") != std::string::npos);
  CHECK(validation_message(R"({"action": "dims", "params": {"genus": 1}, "colour": 2})").find("colour") !=
        std::string::npos);
  CHECK(validation_message(R"({"action": "simulate", "model": "top", "integrator": {"dt": "x"}})")
            .find("integrator.dt") != std::string::npos);
  CHECK(validation_message(R"({"action": "fly"})").find("action") != std::string::npos);
  CHECK(validation_message("{not json").size() > 0);
  CHECK(validation_message(R"({"action": "simulate", "model": "cm", "params": {"variant": "V"}})")
            .find("curve") != std::string::npos);
}

TEST_CASE("seed override replaces the config seed") {
  const std::string text = R"({"action": "simulate", "model": "top", "seed": 3})";
  CHECK(parse_scenario(text).seed == 3);
  const Scenario a = parse_scenario(text, 11);
  CHECK(a.seed == 11);
  CHECK(a.initial_source == "random:11");
  CHECK(a.initial.y == parse_scenario(R"({"action": "simulate", "model": "top", "seed": 11})").initial.y);
}

TEST_CASE("a 3-step trajectory writes 4 data rows") {
  const Scenario s = parse_scenario(
      R"({"action": "simulate", "model": "top", "params": {"J": [1, 2, 3]},
          "integrator": {"dt": 0.01, "t_end": 0.03}})");
  const Trajectory tr = integrate(*s.model, s.initial, s.integrator);
  std::ostringstream out;
  write_trajectory_csv(*s.model, tr, out);
  const auto rows = lines_of(out.str());
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].rfind("t,p0_re,p0_im", 0) == 0);
  CHECK(rows[1].rfind("0,", 0) == 0);
  for (const auto& r : rows) CHECK(field_count(r) == field_count(rows[0]));

  std::ostringstream strided;
  write_trajectory_csv(*s.model, tr, strided, 2);
  const auto srows = lines_of(strided.str());
  REQUIRE(srows.size() == 4);  // steps 0, 2 and the last one
  CHECK(srows[3] == rows[4]);
  CHECK_THROWS_AS(write_trajectory_csv(*s.model, tr, strided, 0), ValidationError);
}

TEST_CASE("dims report round-trips through json") {
  for (const char* label : {"A1", "A3", "B2", "C3", "D4", "G2", "E6"}) {
    const GroupType gt = GroupType::parse(label);
    const Json d = to_json(dim_report(gt));
    CHECK(to_json(dim_report_from_json(Json::parse(dump(d)))) == d);
    const Json c = to_json(count_report(gt, 2, 3));
    CHECK(to_json(count_report_from_json(Json::parse(dump(c)))) == c);
  }
  const Json j = dims_json({GroupType::parse("A1")}, 1, 1);
  CHECK(j["reports"][0]["counts"]["dim_M_V"] == 4);
}

TEST_CASE("manifest records seed, integrator and calibration") {
  const Scenario s = parse_scenario(R"({"action": "simulate", "model": "top", "seed": 5})");
  const Json m = manifest_json(s, {"trajectory.csv"});
  CHECK(m["version"] == kVersion);
  CHECK(m["seed"] == 5);
  CHECK(m["integrator"]["dt"] == 1e-3);
  CHECK(m["calibration"]["top"]["a0"] == kTopLax.a0);
  CHECK(m["calibration"]["top"]["b0"] == kTopLax.b0);
  CHECK(m["calibration"]["cm"]["kappa"] == kCmLax.kappa);
  CHECK(m["files"][0] == "trajectory.csv");
}

TEST_CASE("dispatch dims and spectrum") {
  Scenario d = parse_scenario(R"({"action": "dims", "params": {"types": "A1", "genus": 1, "marked": 1}})");
  d.outputs.dir = scratch("dims").string();
  const DispatchResult rd = dispatch(d);
  CHECK(rd.exit_code == 0);
  CHECK(rd.report["reports"][0]["counts"]["dim_M_V"] == 4);
  CHECK(fs::exists(fs::path(d.outputs.dir) / "dims.json"));
  CHECK(fs::exists(fs::path(d.outputs.dir) / "manifest.json"));

  Scenario q = parse_scenario(R"({"action": "spectrum", "params": {"l": 1, "J": [1, 1, 1]}})");
  q.outputs.dir = scratch("spectrum").string();
  const DispatchResult rq = dispatch(q);
  REQUIRE(rq.report["eigenvalues"].size() == 3);
  for (const auto& e : rq.report["eigenvalues"]) CHECK(e.get<double>() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("simulate output is deterministic") {
  const std::string text = R"({"action": "simulate", "model": "cm", "params": {"variant": "III"},
                               "seed": 4, "integrator": {"dt": 0.01, "t_end": 0.5}})";
  std::string csv[2];
  for (int k = 0; k < 2; ++k) {
    Scenario s = parse_scenario(text);
    s.outputs.dir = scratch("repeat" + std::to_string(k)).string();
    dispatch(s);
    std::ifstream f(fs::path(s.outputs.dir) / "trajectory.csv", std::ios::binary);
    csv[k].assign(std::istreambuf_iterator<char>(f), {});
  }
  CHECK(csv[0].size() > 100);
  CHECK(csv[0] == csv[1]);
}

TEST_CASE("check report json shape") {
  const CriterionResult c = run_criterion(1, 7);
  CHECK(c.pass());
  CheckReport rep{7, {c}};
  const Json j = to_json(rep);
  CHECK(j["seed"] == 7);
  CHECK(j["pass"] == true);
  CHECK(j["criteria"][0]["checks"].size() == c.checks.size());
  CHECK_THROWS(run_criterion(kCriterionCount + 1, 7));
}
