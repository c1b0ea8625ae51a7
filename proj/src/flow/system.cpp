#include "spinhiggs/flow/system.hpp"

#include <cmath>

namespace spinhiggs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

PhasePoint block(const VecX& y, int offset, RealityClass cls) {
  return PhasePoint::from_coords(y.segment<6>(offset), cls);
}

}  // namespace

std::string model_name(const ModelSpec& m) {
  return std::visit(overloaded{[](const TopSpec&) { return std::string("top"); },
                               [](const CmSpec&) { return std::string("cm"); },
                               [](const GaudinSpec&) { return std::string("gaudin"); }},
                    m);
}

SystemState make_state(const PhasePoint& top) { return {flatten(top), top.cls}; }

SystemState make_state(const CMState& cm) {
  SystemState s;
  s.y.resize(8);
  s.y[0] = cm.v;
  s.y[1] = cm.u;
  s.y.segment<6>(2) = cm.spin.coords();
  s.cls = cm.spin.cls;
  return s;
}

SystemState make_state(const GaudinState& g) { return {flatten(g.sites), g.cls}; }

int site_offset(const ModelSpec& m) { return std::holds_alternative<CmSpec>(m) ? 2 : 0; }

int site_count(const ModelSpec& m, const SystemState& s) {
  return static_cast<int>((s.y.size() - site_offset(m)) / 6);
}

PhasePoint site(const ModelSpec& m, const SystemState& s, int k) {
  if (k < 0 || k >= site_count(m, s)) throw IndexError("site index out of range");
  return block(s.y, site_offset(m) + 6 * k, s.cls);
}

CMState cm_view(const SystemState& s) {
  if (s.y.size() != 8) throw ValidationError("cm state must have 8 coordinates");
  return {s.y[0], s.y[1], block(s.y, 2, s.cls)};
}

GaudinState gaudin_view(const ModelSpec& m, const SystemState& s) {
  const auto* g = std::get_if<GaudinSpec>(&m);
  if (!g) throw ValidationError("gaudin_view: model is not gaudin");
  GaudinState out;
  out.marks = g->marks;
  out.cls = s.cls;
  const int n = site_count(m, s);
  for (int k = 0; k < n; ++k) {
    PhasePoint pt = block(s.y, 6 * k, s.cls);
    // off-axis marks carry sites constrained only through their partner
    if (std::abs(out.marks[k].imag()) >= kMarkSeparation) pt.cls = RealityClass::ComplexV;
    out.sites.push_back(pt);
  }
  return out;
}

std::vector<std::string> coordinate_names(const ModelSpec& m, const SystemState& s) {
  static const char* kNames[6] = {"p0", "p1", "p3", "q0", "q1", "q3"};
  std::vector<std::string> out;
  if (std::holds_alternative<CmSpec>(m)) {
    out.push_back("v");
    out.push_back("u");
  }
  const int n = site_count(m, s);
  const bool multi = std::holds_alternative<GaudinSpec>(m);
  for (int k = 0; k < n; ++k) {
    for (const char* c : kNames) {
      out.push_back(multi ? std::string(c) + "_" + std::to_string(k + 1) : std::string(c));
    }
  }
  return out;
}

void validate(const ModelSpec& m, const SystemState& s) {
  std::visit(overloaded{
                 [&](const TopSpec&) {
                   if (s.y.size() != 6) throw ValidationError("top state must have 6 coordinates");
                 },
                 [&](const CmSpec& c) { validate_cm_state(cm_view(s), c.curve, c.variant); },
                 [&](const GaudinSpec& g) {
                   if (s.y.size() != 6 * static_cast<Eigen::Index>(g.marks.size())) {
                     throw ValidationError("gaudin state size does not match the marks");
                   }
                   validate_marks(g.marks);
                   for (const auto& t : g.terms) {
                     if (t.site < 0 || t.site >= static_cast<int>(g.marks.size())) {
                       throw ValidationError("gaudin flow term names site " +
                                             std::to_string(t.site + 1) + " of " +
                                             std::to_string(g.marks.size()));
                     }
                   }
                   if (g.terms.empty()) throw ValidationError("gaudin flow needs a Hamiltonian");
                 }},
             m);
}

VecX vector_field(const ModelSpec& m, const VecX& y) {
  return std::visit(
      overloaded{[&](const TopSpec& t) -> VecX {
                   return top_vector_field_raw(PhasePoint::from_coords(y, RealityClass::ComplexV),
                                               t.params);
                 },
                 [&](const CmSpec& c) -> VecX {
                   const CMState st{y[0], y[1], block(y, 2, RealityClass::ComplexV)};
                   const CmTangent d = cm_vector_field(st, c.curve, c.variant);
                   VecX out(8);
                   out[0] = d.dv;
                   out[1] = d.du;
                   out.segment<6>(2) = d.dspin;
                   return out;
                 },
                 [&](const GaudinSpec& g) -> VecX {
                   VecX out = VecX::Zero(y.size());
                   for (const auto& t : g.terms) {
                     out += t.coef * gaudin_vector_field_raw(y, g.marks, t.site, t.which);
                   }
                   return out;
                 }},
      m);
}

std::vector<StateObservable> default_observables(const ModelSpec& m, const SystemState& s) {
  std::vector<StateObservable> out;
  std::visit(
      overloaded{
          [&](const TopSpec& t) {
            out.push_back({"H2", [](const VecX& y) {
                             return top_h2(collective_spin(block(y, 0, RealityClass::ComplexV)));
                           }});
            const TopParams p = t.params;
            out.push_back({"H0", [p](const VecX& y) {
                             return top_energy(collective_spin(block(y, 0, RealityClass::ComplexV)),
                                               p);
                           }});
          },
          [&](const CmSpec& c) {
            const CmSpec spec = c;
            auto energy = [spec](const VecX& y) {
              return cm_energy({y[0], y[1], block(y, 2, RealityClass::ComplexV)}, spec.curve,
                               spec.variant);
            };
            out.push_back({"H2", [energy](const VecX& y) { return energy(y).H2; }});
            out.push_back({"H0", [energy](const VecX& y) { return energy(y).H0; }});
            out.push_back({"XpXm", [](const VecX& y) {
                             const SpinVector X =
                                 collective_spin(block(y, 2, RealityClass::ComplexV));
                             return X.plus() * X.minus();
                           }});
          },
          [&](const GaudinSpec& g) {
            const int n = static_cast<int>(g.marks.size());
            for (int a = 0; a < n; ++a) {
              for (GaudinFlow w : {GaudinFlow::H2, GaudinFlow::H1}) {
                Observable o = gaudin_observable(g.marks, a, w);
                out.push_back({to_string(w) + "_" + std::to_string(a + 1), o.value});
              }
            }
            for (int alpha = 1; alpha <= 3; ++alpha) {
              out.push_back({"S" + std::to_string(alpha), [n, alpha](const VecX& y) {
                               cplx t = 0.0;
                               for (int a = 0; a < n; ++a) {
                                 t += collective_spin(block(y, 6 * a, RealityClass::ComplexV))[alpha];
                               }
                               return t;
                             }});
            }
          }},
      m);
  (void)s;
  return out;
}

Mat2 lax_matrix(const ModelSpec& m, const VecX& y, cplx z) {
  return std::visit(
      overloaded{[&](const TopSpec& t) -> Mat2 {
                   if (!t.params.curve) {
                     throw ValidationError("top Lax matrix needs an elliptic curve");
                   }
                   return top_lax(collective_spin(block(y, 0, RealityClass::ComplexV)), z,
                                  *t.params.curve)
                       .L;
                 },
                 [&](const CmSpec& c) -> Mat2 {
                   if (c.variant != CmVariant::V) {
                     throw ValidationError("cm Lax matrix is only available for variant V");
                   }
                   return cm_lax({y[0], y[1], block(y, 2, RealityClass::ComplexV)}, z, c.curve).L;
                 },
                 [&](const GaudinSpec& g) -> Mat2 {
                   GaudinState st;
                   st.marks = g.marks;
                   for (Eigen::Index b = 0; b < y.size(); b += 6) {
                     st.sites.push_back(block(y, static_cast<int>(b), RealityClass::ComplexV));
                   }
                   return gaudin_lax(st, z).L;
                 }},
      m);
}

double max_constraint(const ModelSpec& m, const SystemState& s, double* c1, double* c2) {
  double m1 = 0.0, m2 = 0.0;
  for (int k = 0; k < site_count(m, s); ++k) {
    const Constraints c = constraints(site(m, s, k));
    m1 = std::max(m1, std::abs(c.c1));
    m2 = std::max(m2, std::abs(c.c2));
  }
  if (c1) *c1 = m1;
  if (c2) *c2 = m2;
  return std::max(m1, m2);
}

double reality_of(const ModelSpec& m, const SystemState& s) {
  if (std::holds_alternative<GaudinSpec>(m)) return gaudin_reality_residual(gaudin_view(m, s));
  double r = reality_residual(site(m, s, 0));
  // the CM pair (v, u) is real on the real loci
  if (std::holds_alternative<CmSpec>(m) && s.cls != RealityClass::ComplexV) {
    r = std::max({r, std::abs(s.y[0].imag()), std::abs(s.y[1].imag())});
  }
  return r;
}

}  // namespace spinhiggs
