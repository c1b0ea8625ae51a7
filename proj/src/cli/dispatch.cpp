#include "spinhiggs/cli/dispatch.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spinhiggs/cli/check.hpp"
#include "spinhiggs/flow/audit.hpp"

namespace spinhiggs {

namespace fs = std::filesystem;

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw Error("write failed for " + path.string());
}

Json curve_json(const std::optional<EllipticCurve>& c) {
  if (!c) return nullptr;
  Json j;
  j["tau_re"] = c->tau().real();
  j["tau_im"] = c->tau().imag();
  return j;
}

Json params_json(const TopParams& p) {
  return Json::array({to_json(p.J1), to_json(p.J2), to_json(p.J3)});
}

Json model_json(const ModelSpec& m) {
  Json j;
  j["name"] = model_name(m);
  std::visit(
      [&](const auto& spec) {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, TopSpec>) {
          j["J"] = params_json(spec.params);
          j["lax"] = spec.params.curve.has_value();
        } else if constexpr (std::is_same_v<T, CmSpec>) {
          j["variant"] = to_string(spec.variant);
        } else {
          Json marks = Json::array();
          for (cplx x : spec.marks) marks.push_back(to_json(x));
          j["marks"] = marks;
          Json terms = Json::array();
          for (const auto& t : spec.terms) {
            terms.push_back({{"site", t.site + 1}, {"which", to_string(t.which)}, {"coef", to_json(t.coef)}});
          }
          j["flow"] = terms;
        }
      },
      m);
  return j;
}

DispatchResult run_simulate(const Scenario& s, const fs::path& dir) {
  DispatchResult r;
  const ModelSpec& model = *s.model;
  const Trajectory tr = integrate(model, s.initial, s.integrator);

  std::ostringstream csv;
  write_trajectory_csv(model, tr, csv, s.outputs.csv_stride);
  write_file(dir / "trajectory.csv", csv.str());

  const ConservationReport cons = conservation_report(tr);
  Json j;
  j["model"] = model_json(model);
  j["class"] = to_string(s.cls);
  j["steps"] = tr.times.size() - 1;
  j["t_end"] = tr.times.back();
  j["conservation"] = to_json(cons);
  const auto zs = isospectral_samples(model);
  j["isospectral"] = zs.empty() ? Json(nullptr) : to_json(isospectral_check(model, tr, zs));
  write_file(dir / "conservation.json", dump(j));
  r.report = j;
  r.files = {"trajectory.csv", "conservation.json"};

  std::ostringstream sum;
  sum << model_name(model) << ": " << tr.times.size() - 1 << " steps to t = " << tr.times.back()
      << "\n  max |c1| " << cons.max_c1 << ", max |c2| " << cons.max_c2 << ", reality "
      << cons.max_reality << "\n";
  for (const auto& e : cons.entries) {
    sum << "  " << e.name << ": drift " << e.max_abs << " (rel " << e.max_rel << ")\n";
  }
  if (!zs.empty()) sum << "  isospectral drift " << j["isospectral"]["max_drift"].get<double>() << "\n";
  r.summary = sum.str();
  return r;
}

DispatchResult run_check(const Scenario& s, const fs::path& dir) {
  DispatchResult r;
  const CheckReport rep = run_check_suite(s.seed);
  r.report = to_json(rep);
  write_file(dir / "check.json", dump(r.report));
  r.files = {"check.json"};
  std::ostringstream sum;
  double total = 0.0;
  for (const auto& c : rep.criteria) {
    total += c.seconds;
    char line[160];
    std::snprintf(line, sizeof line, "%-4s %d %-22s %7.2fs\n", c.pass() ? "ok" : "FAIL", c.id,
                  c.name.c_str(), c.seconds);
    sum << line;
    if (!c.error.empty()) sum << "     error: " << c.error << "\n";
    for (const auto& k : c.checks) {
      if (!k.pass()) {
        sum << "     " << k.name << ": " << k.value << (k.op == CheckOp::Le ? " > " : " < ")
            << k.limit << "\n";
      }
    }
  }
  sum << (rep.pass() ? "all checks pass" : "some checks FAIL") << " (" << total << " s)\n";
  r.summary = sum.str();
  r.exit_code = rep.pass() ? 0 : 2;
  return r;
}

}  // namespace

std::vector<cplx> isospectral_samples(const ModelSpec& model) {
  return std::visit(
      [](const auto& spec) -> std::vector<cplx> {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, TopSpec>) {
          if (!spec.params.curve) return {};
          const cplx tau = spec.params.curve->tau();
          return {0.3 + 0.2 * tau, 0.55 + 0.4 * tau, 0.8 + 0.7 * tau};
        } else if constexpr (std::is_same_v<T, CmSpec>) {
          if (spec.variant != CmVariant::V) return {};
          const cplx tau = spec.curve.tau();
          return {0.31 + 0.27 * tau, 0.6 + 0.4 * tau};
        } else {
          // fixed candidates, kept when clear of every mark
          const cplx cand[] = {cplx(0.3, 0.5), cplx(-1.0, 0.2), cplx(1.7, -0.6), cplx(0.05, -1.3),
                               cplx(-2.5, 1.1), cplx(3.1, 0.4)};
          std::vector<cplx> out;
          for (cplx z : cand) {
            double d = 1e300;
            for (cplx m : spec.marks) d = std::min(d, std::abs(z - m));
            if (d > 0.1) out.push_back(z);
            if (out.size() == 3) break;
          }
          return out;
        }
      },
      model);
}

void write_trajectory_csv(const ModelSpec& model, const Trajectory& traj, std::ostream& out,
                          int stride) {
  if (stride < 1) throw ValidationError("csv stride must be >= 1");
  if (traj.states.empty()) throw ValidationError("empty trajectory");
  out << "t";
  for (const auto& n : coordinate_names(model, traj.states.front())) out << "," << n << "_re," << n << "_im";
  out << ",c1_abs,c2_abs,reality_residual";
  for (const auto& n : traj.observable_names) out << "," << n << "_re," << n << "_im";
  out << "\n";
  const std::size_t last = traj.states.size() - 1;
  for (std::size_t k = 0; k <= last; ++k) {
    if (k % stride != 0 && k != last) continue;
    out << num(traj.times[k]);
    const VecX& y = traj.states[k].y;
    for (Eigen::Index i = 0; i < y.size(); ++i) out << "," << num(y[i].real()) << "," << num(y[i].imag());
    const AuditRecord& a = traj.audit[k];
    out << "," << num(a.c1_abs) << "," << num(a.c2_abs) << "," << num(a.reality);
    for (cplx o : a.observables) out << "," << num(o.real()) << "," << num(o.imag());
    out << "\n";
  }
}

Json dims_json(const std::vector<GroupType>& types, int genus, int marked) {
  Json j;
  j["genus"] = genus;
  j["marked"] = marked;
  Json reps = Json::array();
  for (const GroupType& gt : types) {
    Json x;
    x["type"] = gt.label();
    x["dims"] = to_json(dim_report(gt));
    x["counts"] = to_json(count_report(gt, genus, marked));
    x["center"] = to_json(center_admissible(gt));
    reps.push_back(x);
  }
  j["reports"] = reps;
  return j;
}

Json manifest_json(const Scenario& s, const std::vector<std::string>& files) {
  Json j;
  j["version"] = kVersion;
  j["action"] = to_string(s.action);
  j["seed"] = s.seed;
  j["class"] = to_string(s.cls);
  j["curve"] = curve_json(s.curve);
  j["model"] = s.model ? model_json(*s.model) : Json(nullptr);
  j["initial"] = s.initial_source.empty() ? Json(nullptr) : Json(s.initial_source);
  Json in;
  in["dt"] = s.integrator.dt;
  in["t_end"] = s.integrator.t_end;
  in["tol"] = s.integrator.tol;
  in["project_every"] = s.integrator.project_every;
  j["integrator"] = in;
  Json cal;
  cal["top"] = to_json(kTopLax);
  cal["cm"] = to_json(kCmLax);
  j["calibration"] = cal;
  j["files"] = files;
  return j;
}

DispatchResult dispatch(const Scenario& s) {
  const fs::path dir(s.outputs.dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory " + dir.string() + ": " + ec.message());

  DispatchResult r;
  switch (s.action) {
    case Action::Simulate: r = run_simulate(s, dir); break;
    case Action::Check: r = run_check(s, dir); break;
    case Action::Dims: {
      r.report = dims_json(s.types, s.genus, s.marked);
      write_file(dir / "dims.json", dump(r.report));
      r.files = {"dims.json"};
      break;
    }
    case Action::Spectrum: {
      const QuantumSpectrum sp = quantum_top_spectrum(s.l, s.spectrum_params);
      r.report = to_json(sp);
      r.report["J"] = params_json(s.spectrum_params);
      write_file(dir / "spectrum.json", dump(r.report));
      r.files = {"spectrum.json"};
      break;
    }
  }
  r.files.push_back("manifest.json");
  write_file(dir / "manifest.json", dump(manifest_json(s, r.files)));
  return r;
}

}  // namespace spinhiggs
