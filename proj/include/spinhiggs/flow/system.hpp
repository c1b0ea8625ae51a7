#pragma once

// A model together with a flat state vector.
//
// Layouts: top = one site (6); cm = (v, u, site) (8); gaudin = n sites (6n).
// Site blocks use the PhasePoint::coords() order.

#include <string>
#include <variant>
#include <vector>

#include "spinhiggs/brackets.hpp"
#include "spinhiggs/models/cm.hpp"
#include "spinhiggs/models/gaudin.hpp"
#include "spinhiggs/models/top.hpp"

namespace spinhiggs {

struct TopSpec {
  TopParams params;
};

struct CmSpec {
  EllipticCurve curve;
  CmVariant variant = CmVariant::V;
};

struct GaudinTerm {
  int site;
  GaudinFlow which;
  cplx coef = 1.0;
};

// The flow of sum_k coef_k H_k.
struct GaudinSpec {
  std::vector<cplx> marks;
  std::vector<GaudinTerm> terms;
};

using ModelSpec = std::variant<TopSpec, CmSpec, GaudinSpec>;

std::string model_name(const ModelSpec& m);

struct SystemState {
  VecX y;
  RealityClass cls = RealityClass::ComplexV;
};

SystemState make_state(const PhasePoint& top);
SystemState make_state(const CMState& cm);
SystemState make_state(const GaudinState& g);

int site_offset(const ModelSpec& m);
int site_count(const ModelSpec& m, const SystemState& s);
PhasePoint site(const ModelSpec& m, const SystemState& s, int k);
CMState cm_view(const SystemState& s);
GaudinState gaudin_view(const ModelSpec& m, const SystemState& s);

// Names of the flat coordinates, in order.
std::vector<std::string> coordinate_names(const ModelSpec& m, const SystemState& s);

// Checks sizes, parameters and model-specific invariants.
void validate(const ModelSpec& m, const SystemState& s);

VecX vector_field(const ModelSpec& m, const VecX& y);

struct StateObservable {
  std::string name;
  std::function<cplx(const VecX&)> value;
};

// Integrals audited along trajectories: top (H2, H0), cm (H2, H0, XpXm),
// gaudin (H2^a, H1^a, S1, S2, S3).
std::vector<StateObservable> default_observables(const ModelSpec& m, const SystemState& s);

// Throws ValidationError when the model has no elliptic or rational Lax matrix
// (top without a curve, cm variants III and IV).
Mat2 lax_matrix(const ModelSpec& m, const VecX& y, cplx z);

double max_constraint(const ModelSpec& m, const SystemState& s, double* c1 = nullptr,
                      double* c2 = nullptr);
double reality_of(const ModelSpec& m, const SystemState& s);

}  // namespace spinhiggs
