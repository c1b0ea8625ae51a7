#include "spinhiggs/cli/json_io.hpp"

namespace spinhiggs {

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ValidationError(path + ": expected a number or [re, im]");
}

Json to_json(const DimReport& r) {
  Json j;
  j["type"] = r.type.label();
  j["orders"] = r.orders;
  j["coxeter"] = r.coxeter;
  j["dim_G"] = r.dim_G;
  j["dim_C"] = r.dim_C;
  j["dim_GR"] = r.dim_GR;
  j["dim_U"] = r.dim_U;
  j["dim_Uc"] = r.dim_Uc;
  j["dim_XI"] = r.dim_XI;
  j["dim_XII"] = r.dim_XII;
  j["dim_XIII"] = r.dim_XIII;
  j["dim_XIV"] = r.dim_XIV;
  j["dim_XV"] = r.dim_XV;
  j["dim_Fl"] = r.dim_Fl;
  j["orbit_dim"] = r.orbit_dim;
  return j;
}

Json to_json(const CountReport& r) {
  Json j;
  j["type"] = r.type.label();
  j["genus"] = r.g;
  j["marked"] = r.n;
  j["dim_Bun_par"] = r.dim_Bun_par;
  j["dim_Bun_0"] = r.dim_Bun_0;
  j["dim_Bun_I_II"] = r.dim_Bun_I_II;
  j["dim_Bun_V"] = r.dim_Bun_V;
  j["dim_M_V"] = r.dim_M_V;
  j["dim_M_I_II"] = r.dim_M_I_II;
  j["n_j"] = r.n_j;
  j["N_G"] = r.N_G;
  j["N_G_R"] = r.N_G_R;
  j["deficiency"] = r.deficiency;
  j["parabolic_excess"] = r.parabolic_excess;
  return j;
}

Json to_json(const CenterReport& r) {
  Json j;
  j["cyclic_factors"] = r.cyclic_factors;
  j["description"] = r.description;
  j["classes"] = r.classes;
  j["admissible"] = r.admissible;
  return j;
}

Json to_json(const TopLaxCalibration& c) {
  Json j;
  j["slot"] = c.slot;
  j["sign"] = c.sign;
  j["i_on_x2"] = c.i_on_x2;
  j["a0"] = c.a0;
  j["b0"] = c.b0;
  return j;
}

Json to_json(const CmLaxCalibration& c) {
  Json j;
  j["plus_on_lower"] = c.plus_on_lower;
  j["kappa"] = c.kappa;
  j["a0"] = c.a0;
  j["b0"] = c.b0;
  return j;
}

Json to_json(const ConservationReport& r) {
  Json j;
  j["max_c1"] = r.max_c1;
  j["max_c2"] = r.max_c2;
  j["max_reality_residual"] = r.max_reality;
  Json e = Json::array();
  for (const auto& d : r.entries) {
    Json x;
    x["name"] = d.name;
    x["initial"] = to_json(d.initial);
    x["max_abs_drift"] = d.max_abs;
    x["max_rel_drift"] = d.max_rel;
    e.push_back(x);
  }
  j["observables"] = e;
  return j;
}

Json to_json(const IsospectralReport& r) {
  Json j;
  j["max_drift"] = r.max_drift;
  Json e = Json::array();
  for (const auto& d : r.entries) {
    Json x;
    x["z"] = to_json(d.z);
    x["trace_drift"] = d.trace_drift;
    x["det_drift"] = d.det_drift;
    e.push_back(x);
  }
  j["samples"] = e;
  return j;
}

Json to_json(const QuantumSpectrum& s) {
  Json j;
  j["l"] = s.l;
  j["dimension"] = s.eigenvalues.size();
  j["hermitian"] = s.hermitian;
  Json e = Json::array();
  for (cplx v : s.eigenvalues) {
    if (s.hermitian) {
      e.push_back(v.real());
    } else {
      e.push_back(to_json(v));
    }
  }
  j["eigenvalues"] = e;
  return j;
}

Json to_json(const PhasePoint& pt) {
  Json j;
  j["p"] = Json::array({to_json(pt.p0), to_json(pt.p1), to_json(pt.p3)});
  j["q"] = Json::array({to_json(pt.q0), to_json(pt.q1), to_json(pt.q3)});
  return j;
}

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("report: missing field ") + key);
  try {
    return j[key].get<T>();
  } catch (const Json::exception&) {
    throw ValidationError(std::string("report: bad field ") + key);
  }
}

}  // namespace

DimReport dim_report_from_json(const Json& j) {
  DimReport r;
  r.type = GroupType::parse(field<std::string>(j, "type"));
  r.orders = field<std::vector<int>>(j, "orders");
  r.coxeter = field<std::int64_t>(j, "coxeter");
  r.dim_G = field<std::int64_t>(j, "dim_G");
  r.dim_C = field<std::int64_t>(j, "dim_C");
  r.dim_GR = field<std::int64_t>(j, "dim_GR");
  r.dim_U = field<std::int64_t>(j, "dim_U");
  r.dim_Uc = field<std::int64_t>(j, "dim_Uc");
  r.dim_XI = field<std::int64_t>(j, "dim_XI");
  r.dim_XII = field<std::int64_t>(j, "dim_XII");
  r.dim_XIII = field<std::int64_t>(j, "dim_XIII");
  r.dim_XIV = field<std::int64_t>(j, "dim_XIV");
  r.dim_XV = field<std::int64_t>(j, "dim_XV");
  r.dim_Fl = field<std::int64_t>(j, "dim_Fl");
  r.orbit_dim = field<std::int64_t>(j, "orbit_dim");
  return r;
}

CountReport count_report_from_json(const Json& j) {
  CountReport r;
  r.type = GroupType::parse(field<std::string>(j, "type"));
  r.g = field<int>(j, "genus");
  r.n = field<int>(j, "marked");
  r.dim_Bun_par = field<std::int64_t>(j, "dim_Bun_par");
  r.dim_Bun_0 = field<std::int64_t>(j, "dim_Bun_0");
  r.dim_Bun_I_II = field<std::int64_t>(j, "dim_Bun_I_II");
  r.dim_Bun_V = field<std::int64_t>(j, "dim_Bun_V");
  r.dim_M_V = field<std::int64_t>(j, "dim_M_V");
  r.dim_M_I_II = field<std::int64_t>(j, "dim_M_I_II");
  r.n_j = field<std::vector<std::int64_t>>(j, "n_j");
  r.N_G = field<std::int64_t>(j, "N_G");
  r.N_G_R = field<std::int64_t>(j, "N_G_R");
  r.deficiency = field<std::int64_t>(j, "deficiency");
  r.parabolic_excess = field<std::int64_t>(j, "parabolic_excess");
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace spinhiggs
