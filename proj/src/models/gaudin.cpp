#include "spinhiggs/models/gaudin.hpp"

#include <cmath>
#include <limits>

#include "spinhiggs/flow/sampling.hpp"

namespace spinhiggs {

std::string to_string(GaudinFlow f) { return f == GaudinFlow::H2 ? "H2" : "H1"; }

GaudinFlow parse_gaudin_flow(const std::string& s) {
  if (s == "H2") return GaudinFlow::H2;
  if (s == "H1") return GaudinFlow::H1;
  throw ValidationError("unknown Gaudin flow '" + s + "' (expected H2 or H1)");
}

void validate_marks(const std::vector<cplx>& marks) {
  for (std::size_t a = 0; a < marks.size(); ++a) {
    for (std::size_t b = a + 1; b < marks.size(); ++b) {
      if (std::abs(marks[a] - marks[b]) < kMarkSeparation) {
        throw ValidationError("coincident marks at indices " + std::to_string(a) + " and " +
                              std::to_string(b));
      }
    }
  }
}

void validate_gaudin(const GaudinState& s) {
  if (s.sites.empty()) throw ValidationError("Gaudin state needs at least one site");
  if (s.sites.size() != s.marks.size()) {
    throw ValidationError("Gaudin state: " + std::to_string(s.sites.size()) + " sites but " +
                          std::to_string(s.marks.size()) + " marks");
  }
  validate_marks(s.marks);
}

std::vector<SpinVector> gaudin_spins(const GaudinState& s) {
  std::vector<SpinVector> out;
  out.reserve(s.sites.size());
  for (const auto& pt : s.sites) out.push_back(collective_spin(pt));
  return out;
}

SpinVector gaudin_total_spin(const GaudinState& s) {
  SpinVector t{0.0, 0.0, 0.0};
  for (const auto& pt : s.sites) t = t + collective_spin(pt);
  return t;
}

GaudinHamiltonians gaudin_hamiltonians(const GaudinState& s) {
  validate_gaudin(s);
  const auto X = gaudin_spins(s);
  const std::size_t n = X.size();
  GaudinHamiltonians h;
  h.H2.resize(n);
  h.H1.assign(n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    h.H2[a] = pairing(X[a], X[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (b != a) h.H1[a] += pairing(X[a], X[b]) / (s.marks[b] - s.marks[a]);
    }
  }
  return h;
}

LaxSample gaudin_lax(const GaudinState& s, cplx z) {
  Mat2 L = Mat2::Zero();
  for (std::size_t a = 0; a < s.sites.size(); ++a) {
    const cplx d = z - s.marks[a];
    if (std::abs(d) < kMarkSeparation) throw PoleError("gaudin_lax: z is a marked point");
    L += spin_matrix(collective_spin(s.sites[a])) / d;
  }
  return {z, L};
}

namespace {

Mat2 sym(const Mat2& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

VecX gaudin_vector_field_raw(const VecX& x, const std::vector<cplx>& marks, int a,
                             GaudinFlow which) {
  const int n = static_cast<int>(marks.size());
  if (x.size() != 6 * n) throw ValidationError("gaudin_vector_field: state size mismatch");
  if (a < 0 || a >= n) throw IndexError("gaudin_vector_field: site index out of range");
  std::vector<Mat2> P(n), Q(n);
  std::vector<cplx> X0(n);
  for (int b = 0; b < n; ++b) {
    const PhasePoint pt = site_of(x, b);
    P[b] = p_matrix(pt);
    Q[b] = q_matrix(pt);
    X0[b] = collective_x0(pt);
  }
  VecX out = VecX::Zero(x.size());
  auto put = [&](int b, const Mat2& dP, const Mat2& dQ) {
    out.segment<6>(6 * b) = from_matrices(dP, dQ, RealityClass::ComplexV).coords();
  };
  if (which == GaudinFlow::H2) {
    put(a, -2.0 * (P[a] * Q[a] * P[a] - X0[a] * P[a]), 2.0 * (Q[a] * P[a] * Q[a] - X0[a] * Q[a]));
    return out;
  }
  const Mat2 QaPa = Q[a] * P[a];
  Mat2 dPa = Mat2::Zero(), dQa = Mat2::Zero();
  for (int b = 0; b < n; ++b) {
    if (b == a) continue;
    const cplx d = marks[b] - marks[a];
    if (std::abs(d) < kMarkSeparation) throw ValidationError("gaudin_vector_field: coincident marks");
    const cplx w = 1.0 / d;
    put(b, -w * (sym(P[b] * Q[a] * P[a]) - X0[a] * P[b]), w * (sym(QaPa * Q[b]) - X0[a] * Q[b]));
    dQa += w * (sym(Q[b] * P[b] * Q[a]) - X0[b] * Q[a]);
    dPa -= w * (sym(P[a] * Q[b] * P[b]) - X0[b] * P[a]);
  }
  put(a, dPa, dQa);
  return out;
}

VecX gaudin_vector_field(const GaudinState& s, int a, GaudinFlow which) {
  validate_gaudin(s);
  return gaudin_vector_field_raw(flatten(s.sites), s.marks, a, which);
}

Observable gaudin_observable(const std::vector<cplx>& marks, int a, GaudinFlow which) {
  const int n = static_cast<int>(marks.size());
  if (a < 0 || a >= n) throw IndexError("gaudin_observable: site index out of range");
  if (which == GaudinFlow::H2) {
    Observable o = obs::spin_pairing(a, a);
    o.name = "H2^" + std::to_string(a);
    return o;
  }
  std::vector<Observable> terms;
  std::vector<cplx> w;
  for (int b = 0; b < n; ++b) {
    if (b == a) continue;
    terms.push_back(obs::spin_pairing(a, b));
    w.push_back(1.0 / (marks[b] - marks[a]));
  }
  Observable o;
  o.name = "H1^" + std::to_string(a);
  o.value = [terms, w](const VecX& x) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < terms.size(); ++k) s += w[k] * terms[k].value(x);
    return s;
  };
  o.gradient = [terms, w](const VecX& x) {
    VecX g = VecX::Zero(x.size());
    for (std::size_t k = 0; k < terms.size(); ++k) g += w[k] * terms[k].gradient(x);
    return g;
  };
  return o;
}

GaudinState random_gaudin_state(RealityClass cls, int n, std::mt19937_64& rng, int conj_pairs) {
  if (n < 1) throw ValidationError("random_gaudin_state: n must be positive");
  GaudinState s;
  s.cls = cls;
  if (cls == RealityClass::ComplexV) conj_pairs = 0;
  if (conj_pairs < 0 || 2 * conj_pairs > n) {
    throw ValidationError("random_gaudin_state: too many conjugate pairs");
  }
  const int n_real = n - 2 * conj_pairs;
  for (int k = 0; k < n_real; ++k) {
    // Marks spread over disjoint windows so they stay well separated.
    cplx x = -2.0 + 4.0 * (k + uniform(rng, 0.2, 0.8)) / n_real;
    if (cls == RealityClass::ComplexV) x += kI * uniform(rng, -1.0, 1.0);
    s.marks.push_back(x);
    s.sites.push_back(random_onshell(cls, rng));
  }
  for (int k = 0; k < conj_pairs; ++k) {
    const cplx x(uniform(rng, -2.0, 2.0), uniform(rng, 0.5, 1.5) + 2.0 * k);
    PhasePoint pt = random_onshell(RealityClass::ComplexV, rng);
    s.marks.push_back(x);
    s.sites.push_back(pt);
    s.marks.push_back(std::conj(x));
    PhasePoint partner = reality_involution(pt, cls);
    partner.cls = RealityClass::ComplexV;
    s.sites.push_back(partner);
  }
  validate_gaudin(s);
  return s;
}

double gaudin_reality_residual(const GaudinState& s) {
  if (s.cls == RealityClass::ComplexV) return 0.0;
  double r = 0.0;
  for (std::size_t a = 0; a < s.sites.size(); ++a) {
    const cplx x = s.marks[a];
    if (std::abs(x.imag()) < kMarkSeparation) {
      PhasePoint pt = s.sites[a];
      pt.cls = s.cls;
      r = std::max(r, reality_residual(pt));
      continue;
    }
    bool found = false;
    for (std::size_t b = 0; b < s.sites.size(); ++b) {
      if (b == a || std::abs(s.marks[b] - std::conj(x)) >= kMarkSeparation) continue;
      const Vec6 d = reality_involution(s.sites[b], s.cls).coords() - s.sites[a].coords();
      r = std::max(r, d.cwiseAbs().maxCoeff());
      found = true;
    }
    if (!found) return std::numeric_limits<double>::infinity();
  }
  return r;
}

}  // namespace spinhiggs
