#include "spinhiggs/cli/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "spinhiggs/flow/sampling.hpp"
#include "spinhiggs/models/quantum_top.hpp"

namespace spinhiggs {

std::string to_string(Action a) {
  switch (a) {
    case Action::Simulate: return "simulate";
    case Action::Dims: return "dims";
    case Action::Check: return "check";
    case Action::Spectrum: return "spectrum";
  }
  return "?";
}

Action parse_action(const std::string& s) {
  if (s == "simulate") return Action::Simulate;
  if (s == "dims") return Action::Dims;
  if (s == "check") return Action::Check;
  if (s == "spectrum") return Action::Spectrum;
  throw ValidationError("action: unknown action '" + s +
                        "' (expected simulate, dims, check or spectrum)");
}

CmRandomDefaults cm_random_defaults(CmVariant v) {
  switch (v) {
    case CmVariant::V: return {0.25, 0.3, 0.0};
    case CmVariant::III: return {2.0, 0.5, 0.0};
    case CmVariant::IV: return {0.6, 0.3, 0.05};
  }
  return {0.25, 0.3, 0.0};
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(path.empty() ? "scenario" : path, "expected an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      fail(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
    }
  }
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

double number_at(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::int64_t integer_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

template <class F>
auto rethrow_at(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
}

std::array<cplx, 3> triple_at(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected an array of 3 numbers or [re, im] pairs");
  std::array<cplx, 3> out;
  for (int k = 0; k < 3; ++k) {
    out[k] = complex_from_json(j[k], path + "[" + std::to_string(k) + "]");
  }
  return out;
}

EllipticCurve curve_at(const Json& j) {
  only_keys(j, "curve", {"tau_re", "tau_im"});
  const double re = j.contains("tau_re") ? number_at(j["tau_re"], "curve.tau_re") : 0.0;
  if (!j.contains("tau_im")) fail("curve.tau_im", "required");
  const double im = number_at(j["tau_im"], "curve.tau_im");
  if (!(im > 0.0)) fail("curve.tau_im", "must be positive, got " + std::to_string(im));
  try {
    return EllipticCurve(cplx(re, im));
  } catch (const Error& e) {
    fail("curve", e.what());
  }
}

// "J": [J1, J2, J3] or "curve".
TopParams top_params_at(const Json& params, const std::optional<EllipticCurve>& curve,
                        const std::string& path) {
  const std::string jp = join(path, "J");
  Json J;
  if (params.contains("J")) {
    J = params["J"];
  } else {
    J = curve ? Json("curve") : Json::array({1.0, 1.0, 1.0});
  }
  if (J.is_string()) {
    if (J.get<std::string>() != "curve") fail(jp, "expected \"curve\" or an array of 3 values");
    if (!curve) fail(jp, "\"curve\" needs a curve section");
    return TopParams::from_curve(*curve);
  }
  const auto v = triple_at(J, jp);
  return TopParams{v[0], v[1], v[2], std::nullopt};
}

PhasePoint point_at(const Json& j, const std::string& path, RealityClass cls) {
  if (!j.is_object()) fail(path, "expected an object with p and q");
  if (!j.contains("p")) fail(join(path, "p"), "required");
  if (!j.contains("q")) fail(join(path, "q"), "required");
  const auto p = triple_at(j["p"], join(path, "p"));
  const auto q = triple_at(j["q"], join(path, "q"));
  const PhasePoint pt{p[0], p[1], p[2], q[0], q[1], q[2], cls};
  const double v = constraint_violation(pt);
  if (v > 1e-8) fail(path, "point is off shell by " + std::to_string(v));
  return pt;
}

std::uint64_t random_seed_of(const Json& init, std::uint64_t seed) {
  const std::string s = init.get<std::string>();
  if (s == "random") return seed;
  const std::string prefix = "random:";
  if (s.rfind(prefix, 0) != 0) fail("initial", "expected \"random\", \"random:<seed>\" or an object");
  const std::string digits = s.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    fail("initial", "bad seed in '" + s + "'");
  }
  try {
    return std::stoull(digits);
  } catch (const std::exception&) {
    fail("initial", "seed out of range in '" + s + "'");
  }
}

void parse_simulate(Scenario& s, const Json& j) {
  if (!j.contains("model")) fail("model", "required for simulate");
  const std::string model = string_at(j["model"], "model");
  const Json params = j.value("params", Json::object());
  const Json init = j.value("initial", Json("random"));
  if (!init.is_string() && !init.is_object()) {
    fail("initial", "expected \"random\", \"random:<seed>\" or an object");
  }
  const bool random = init.is_string();
  const std::uint64_t rseed = random ? random_seed_of(init, s.seed) : 0;
  s.initial_source = random ? "random:" + std::to_string(rseed) : "explicit";

  if (model == "top") {
    only_keys(params, "params", {"J"});
    const TopParams tp = top_params_at(params, s.curve, "params");
    s.model = TopSpec{tp};
    if (random) {
      s.initial = make_state(random_onshell(s.cls, rseed, 0));
    } else {
      only_keys(init, "initial", {"p", "q"});
      s.initial = make_state(point_at(init, "initial", s.cls));
    }
  } else if (model == "cm") {
    only_keys(params, "params", {"variant"});
    const CmVariant var = params.contains("variant")
                              ? rethrow_at("params.variant", [&] {
                                  return parse_cm_variant(string_at(params["variant"], "params.variant"));
                                })
                              : CmVariant::V;
    if (!j.contains("class") && var == CmVariant::IV) s.cls = RealityClass::TypeIV;
    if (var == CmVariant::V && !s.curve) fail("curve", "required for the cm V variant");
    const EllipticCurve curve = s.curve ? *s.curve : EllipticCurve(kI);
    s.model = CmSpec{curve, var};
    CMState st;
    if (random) {
      const CmRandomDefaults d = cm_random_defaults(var);
      auto rng = make_stream(rseed, 0);
      st = CMState{d.v, d.u, random_x3_free_spin(s.cls, rng)};
      if (d.spin_cap > 0.0) {
        const double f = d.spin_cap / max_abs(collective_spin(st.spin));
        st.spin.p0 *= f;
        st.spin.p1 *= f;
        st.spin.p3 *= f;
      }
    } else {
      only_keys(init, "initial", {"v", "u", "p", "q"});
      if (!init.contains("v")) fail("initial.v", "required");
      if (!init.contains("u")) fail("initial.u", "required");
      st.v = complex_from_json(init["v"], "initial.v");
      st.u = complex_from_json(init["u"], "initial.u");
      st.spin = point_at(init, "initial", s.cls);
    }
    s.initial = make_state(st);
  } else if (model == "gaudin") {
    only_keys(params, "params", {"marks", "n", "flow", "conj_pairs"});
    GaudinState g;
    g.cls = s.cls;
    const int pairs = params.contains("conj_pairs")
                          ? static_cast<int>(integer_at(params["conj_pairs"], "params.conj_pairs"))
                          : 0;
    if (params.contains("marks")) {
      const Json& m = params["marks"];
      if (!m.is_array() || m.empty()) fail("params.marks", "expected a non-empty array");
      for (std::size_t k = 0; k < m.size(); ++k) {
        g.marks.push_back(complex_from_json(m[k], "params.marks[" + std::to_string(k) + "]"));
      }
      rethrow_at("params.marks", [&] { validate_marks(g.marks); });
    }
    if (random) {
      if (g.marks.empty()) {
        const std::int64_t n = params.contains("n") ? integer_at(params["n"], "params.n") : 3;
        if (n < 1 || n > 1000) fail("params.n", "must lie in [1, 1000]");
        auto rng = make_stream(rseed, 0);
        g = rethrow_at("params", [&] {
          return random_gaudin_state(s.cls, static_cast<int>(n), rng, pairs);
        });
      } else {
        for (std::size_t a = 0; a < g.marks.size(); ++a) {
          g.sites.push_back(random_onshell(s.cls, rseed, a));
        }
      }
    } else {
      only_keys(init, "initial", {"sites"});
      if (!init.contains("sites") || !init["sites"].is_array()) {
        fail("initial.sites", "expected an array of {p, q} objects");
      }
      const Json& sites = init["sites"];
      for (std::size_t a = 0; a < sites.size(); ++a) {
        g.sites.push_back(point_at(sites[a], "initial.sites[" + std::to_string(a) + "]", s.cls));
      }
      if (g.marks.empty()) fail("params.marks", "required with an explicit initial state");
      if (g.sites.size() != g.marks.size()) {
        fail("initial.sites", "has " + std::to_string(g.sites.size()) + " sites for " +
                                  std::to_string(g.marks.size()) + " marks");
      }
    }
    GaudinSpec spec{g.marks, {}};
    if (params.contains("flow")) {
      const Json& f = params["flow"];
      if (!f.is_array()) fail("params.flow", "expected an array");
      for (std::size_t k = 0; k < f.size(); ++k) {
        const std::string p = "params.flow[" + std::to_string(k) + "]";
        only_keys(f[k], p, {"site", "which", "coef"});
        if (!f[k].contains("site")) fail(p + ".site", "required");
        const std::int64_t site = integer_at(f[k]["site"], p + ".site");
        if (site < 1 || site > static_cast<std::int64_t>(g.marks.size())) {
          fail(p + ".site", "must lie in 1.." + std::to_string(g.marks.size()));
        }
        const GaudinFlow which =
            f[k].contains("which") ? rethrow_at(p + ".which", [&] {
              return parse_gaudin_flow(string_at(f[k]["which"], p + ".which"));
            })
                                   : GaudinFlow::H1;
        const cplx coef = f[k].contains("coef") ? complex_from_json(f[k]["coef"], p + ".coef") : 1.0;
        spec.terms.push_back({static_cast<int>(site - 1), which, coef});
      }
      if (spec.terms.empty()) fail("params.flow", "must name at least one Hamiltonian");
    } else {
      spec.terms.push_back({0, GaudinFlow::H1, 1.0});
    }
    s.model = spec;
    s.initial = make_state(g);
  } else {
    fail("model", "unknown model '" + model + "' (expected top, cm or gaudin)");
  }
  s.initial.cls = s.cls;
  rethrow_at("initial", [&] { validate(*s.model, s.initial); });
  const double real = reality_of(*s.model, s.initial);
  if (real > s.integrator.tol) {
    fail("initial", "violates reality class " + to_string(s.cls) + " by " + std::to_string(real));
  }
}

}  // namespace

Scenario scenario_from_json(const Json& j, std::optional<std::uint64_t> seed_override) {
  only_keys(j, "", {"action", "model", "curve", "class", "seed", "params", "initial",
                    "integrator", "outputs"});
  Scenario s;
  if (!j.contains("action")) fail("action", "required");
  s.action = parse_action(string_at(j["action"], "action"));
  if (j.contains("seed")) {
    const std::int64_t seed = integer_at(j["seed"], "seed");
    if (seed < 0) fail("seed", "must be non-negative");
    s.seed = static_cast<std::uint64_t>(seed);
  }
  if (seed_override) s.seed = *seed_override;
  if (j.contains("class")) {
    s.cls = rethrow_at("class", [&] { return parse_reality_class(string_at(j["class"], "class")); });
  }
  if (j.contains("curve")) s.curve = curve_at(j["curve"]);

  if (j.contains("integrator")) {
    const Json& in = j["integrator"];
    only_keys(in, "integrator", {"dt", "t_end", "tol", "project_every"});
    if (in.contains("dt")) s.integrator.dt = number_at(in["dt"], "integrator.dt");
    if (in.contains("t_end")) s.integrator.t_end = number_at(in["t_end"], "integrator.t_end");
    if (in.contains("tol")) s.integrator.tol = number_at(in["tol"], "integrator.tol");
    if (in.contains("project_every")) {
      s.integrator.project_every =
          static_cast<int>(integer_at(in["project_every"], "integrator.project_every"));
    }
  }
  s.integrator.validate();

  if (j.contains("outputs")) {
    const Json& o = j["outputs"];
    only_keys(o, "outputs", {"dir", "csv_stride"});
    if (o.contains("dir")) s.outputs.dir = string_at(o["dir"], "outputs.dir");
    if (s.outputs.dir.empty()) fail("outputs.dir", "must not be empty");
    if (o.contains("csv_stride")) {
      const std::int64_t k = integer_at(o["csv_stride"], "outputs.csv_stride");
      if (k < 1) fail("outputs.csv_stride", "must be >= 1");
      s.outputs.csv_stride = static_cast<int>(k);
    }
  }

  const Json params = j.value("params", Json::object());
  switch (s.action) {
    case Action::Simulate: parse_simulate(s, j); break;
    case Action::Dims: {
      only_keys(params, "params", {"types", "genus", "marked"});
      Json types = params.value("types", Json::array({"A1"}));
      if (types.is_string()) types = Json::array({types});
      if (!types.is_array() || types.empty()) fail("params.types", "expected a non-empty array");
      for (std::size_t k = 0; k < types.size(); ++k) {
        const std::string p = "params.types[" + std::to_string(k) + "]";
        s.types.push_back(rethrow_at(p, [&] { return GroupType::parse(string_at(types[k], p)); }));
      }
      if (params.contains("genus")) s.genus = static_cast<int>(integer_at(params["genus"], "params.genus"));
      if (params.contains("marked")) {
        s.marked = static_cast<int>(integer_at(params["marked"], "params.marked"));
      }
      if (s.genus < 0 || s.genus > kMaxGenusOrPoints) fail("params.genus", "out of range");
      if (s.marked < 0 || s.marked > kMaxGenusOrPoints) fail("params.marked", "out of range");
      break;
    }
    case Action::Spectrum: {
      only_keys(params, "params", {"l", "J"});
      if (params.contains("l")) s.l = number_at(params["l"], "params.l");
      if (!(s.l > 0.0) || s.l > kMaxSpin || std::abs(2 * s.l - std::round(2 * s.l)) > 1e-12) {
        fail("params.l", "must be a positive half-integer <= " + std::to_string(int(kMaxSpin)));
      }
      s.spectrum_params = top_params_at(params, s.curve, "params");
      break;
    }
    case Action::Check:
      // the suite fixes its own models; params are not used
      only_keys(params, "params", {});
      break;
  }
  return s;
}

Scenario parse_scenario(const std::string& text, std::optional<std::uint64_t> seed_override) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("scenario: malformed JSON: ") + e.what());
  }
  return scenario_from_json(j, seed_override);
}

}  // namespace spinhiggs
