#include "spinhiggs/brackets.hpp"

#include <cmath>

namespace spinhiggs {

VecX flatten(const PhasePoint& pt) { return pt.coords(); }

VecX flatten(const std::vector<PhasePoint>& sites) {
  VecX x(6 * static_cast<Eigen::Index>(sites.size()));
  for (std::size_t a = 0; a < sites.size(); ++a) x.segment<6>(6 * a) = sites[a].coords();
  return x;
}

PhasePoint site_of(const VecX& x, int site, RealityClass cls) {
  if (site < 0 || 6 * (site + 1) > x.size()) throw IndexError("site index out of range");
  return PhasePoint::from_coords(x.segment<6>(6 * site), cls);
}

VecX Observable::grad(const VecX& x, double h) const {
  if (gradient) return gradient(x);
  return fd_gradient(value, x, h);
}

VecX fd_gradient(const std::function<cplx(const VecX&)>& f, const VecX& x, double h) {
  VecX g(x.size());
  VecX y = x;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const cplx orig = y[k];
    y[k] = orig + h;
    const cplx fp = f(y);
    y[k] = orig - h;
    const cplx fm = f(y);
    y[k] = orig;
    g[k] = (fp - fm) / (2.0 * h);
  }
  return g;
}

cplx canonical_bracket(const VecX& df, const VecX& dg) {
  if (df.size() != dg.size() || df.size() % 6 != 0) {
    throw ValidationError("canonical_bracket: gradient sizes must match and be multiples of 6");
  }
  cplx s = 0.0;
  for (Eigen::Index b = 0; b < df.size(); b += 6) {
    for (int j = 0; j < 3; ++j) s += df[b + j] * dg[b + 3 + j] - df[b + 3 + j] * dg[b + j];
  }
  return s;
}

cplx canonical_bracket(const Observable& f, const Observable& g, const VecX& x) {
  return canonical_bracket(f.grad(x), g.grad(x));
}

namespace {

// Gradients of c1 and c2 of one site, embedded in the full vector.
void constraint_gradients(const VecX& x, Eigen::Index b, VecX& g1, VecX& g2) {
  g1.setZero(x.size());
  g2.setZero(x.size());
  g1[b + kQ0] = 2.0 * x[b + kQ0];
  g1[b + kQ1] = -2.0 * x[b + kQ1];
  g1[b + kQ3] = -2.0 * x[b + kQ3];
  for (int j = 0; j < 3; ++j) {
    g2[b + j] = x[b + 3 + j];
    g2[b + 3 + j] = x[b + j];
  }
}

cplx dirac_impl(const VecX& df, const VecX& dg, const VecX& x) {
  cplx out = canonical_bracket(df, dg);
  VecX g1, g2;
  for (Eigen::Index b = 0; b < x.size(); b += 6) {
    constraint_gradients(x, b, g1, g2);
    const cplx c12 = canonical_bracket(g1, g2);
    // C = [[0, c12], [-c12, 0]], det = c12^2
    if (std::norm(c12) < kDiracSingularTol) {
      throw SingularError("dirac_bracket: constraint matrix is singular");
    }
    const cplx f1 = canonical_bracket(df, g1), f2 = canonical_bracket(df, g2);
    const cplx h1 = canonical_bracket(dg, g1), h2 = canonical_bracket(dg, g2);
    // sum_ij {f,c_i} (C^-1)_ij {c_j,g} with {c_j,g} = -{g,c_j}
    out -= (f1 * h2 - f2 * h1) / c12;
  }
  return out;
}

}  // namespace

VecX constraint_brackets(const VecX& x) {
  VecX out(x.size() / 6);
  VecX g1, g2;
  for (Eigen::Index b = 0; b < x.size(); b += 6) {
    constraint_gradients(x, b, g1, g2);
    out[b / 6] = canonical_bracket(g1, g2);
  }
  return out;
}

cplx dirac_bracket_unchecked(const Observable& f, const Observable& g, const VecX& x) {
  return dirac_impl(f.grad(x), g.grad(x), x);
}

cplx dirac_bracket(const Observable& f, const Observable& g, const VecX& x, double onshell_tol) {
  for (Eigen::Index s = 0; 6 * s < x.size(); ++s) {
    const double v = constraint_violation(site_of(x, static_cast<int>(s)));
    if (v > onshell_tol) {
      throw OffShellError("dirac_bracket: site " + std::to_string(s) +
                          " is off shell by " + std::to_string(v));
    }
  }
  return dirac_bracket_unchecked(f, g, x);
}

cplx dirac_bracket(const Observable& f, const Observable& g, const PhasePoint& pt,
                   double onshell_tol) {
  return dirac_bracket(f, g, flatten(pt), onshell_tol);
}

Observable bracket_observable(const Observable& f, const Observable& g, BracketKind kind) {
  Observable o;
  o.name = "{" + f.name + "," + g.name + "}";
  if (kind == BracketKind::Canonical) {
    o.value = [f, g](const VecX& x) { return canonical_bracket(f, g, x); };
  } else {
    o.value = [f, g](const VecX& x) { return dirac_bracket_unchecked(f, g, x); };
  }
  return o;
}

std::array<Vec6, 3> spin_gradients(const PhasePoint& pt) {
  std::array<Vec6, 3> g;
  for (auto& v : g) v.setZero();
  // X1 = q0 p1 + q1 p0
  g[0][kP0] = pt.q1;
  g[0][kP1] = pt.q0;
  g[0][kQ0] = pt.p1;
  g[0][kQ1] = pt.p0;
  // X2 = q3 p1 - q1 p3
  g[1][kP1] = pt.q3;
  g[1][kP3] = -pt.q1;
  g[1][kQ1] = -pt.p3;
  g[1][kQ3] = pt.p1;
  // X3 = q0 p3 + q3 p0
  g[2][kP0] = pt.q3;
  g[2][kP3] = pt.q0;
  g[2][kQ0] = pt.p3;
  g[2][kQ3] = pt.p0;
  return g;
}

namespace obs {

namespace {

void check_site(const VecX& x, int site) {
  if (site < 0 || 6 * (site + 1) > x.size()) throw IndexError("observable site out of range");
}

std::string site_suffix(int site) { return site == 0 ? "" : "^" + std::to_string(site); }

const char* kCoordNames[6] = {"p0", "p1", "p3", "q0", "q1", "q3"};

}  // namespace

Observable coordinate(int coord, int site) {
  if (coord < 0 || coord > 5) throw IndexError("coordinate index must be 0..5");
  Observable o;
  o.name = std::string(kCoordNames[coord]) + site_suffix(site);
  const Eigen::Index k = 6 * site + coord;
  o.value = [k, site](const VecX& x) {
    check_site(x, site);
    return x[k];
  };
  o.gradient = [k](const VecX& x) {
    VecX g = VecX::Zero(x.size());
    g[k] = 1.0;
    return g;
  };
  return o;
}

Observable constant(cplx c) {
  Observable o;
  o.name = "const";
  o.value = [c](const VecX&) { return c; };
  o.gradient = [](const VecX& x) { return VecX::Zero(x.size()).eval(); };
  return o;
}

Observable spin(int alpha, int site) {
  if (alpha < 1 || alpha > 3) throw IndexError("spin index must be 1, 2 or 3");
  Observable o;
  o.name = "X" + std::to_string(alpha) + site_suffix(site);
  o.value = [alpha, site](const VecX& x) {
    check_site(x, site);
    return collective_spin(site_of(x, site))[alpha];
  };
  o.gradient = [alpha, site](const VecX& x) {
    check_site(x, site);
    VecX g = VecX::Zero(x.size());
    g.segment<6>(6 * site) = spin_gradients(site_of(x, site))[alpha - 1];
    return g;
  };
  return o;
}

Observable c1(int site) {
  Observable o;
  o.name = "c1" + site_suffix(site);
  o.value = [site](const VecX& x) {
    check_site(x, site);
    return constraints(site_of(x, site)).c1;
  };
  o.gradient = [site](const VecX& x) {
    check_site(x, site);
    VecX g = VecX::Zero(x.size());
    const Eigen::Index b = 6 * site;
    g[b + kQ0] = 2.0 * x[b + kQ0];
    g[b + kQ1] = -2.0 * x[b + kQ1];
    g[b + kQ3] = -2.0 * x[b + kQ3];
    return g;
  };
  return o;
}

Observable c2(int site) {
  Observable o;
  o.name = "c2" + site_suffix(site);
  o.value = [site](const VecX& x) {
    check_site(x, site);
    return constraints(site_of(x, site)).c2;
  };
  o.gradient = [site](const VecX& x) {
    check_site(x, site);
    VecX g = VecX::Zero(x.size());
    const Eigen::Index b = 6 * site;
    for (int j = 0; j < 3; ++j) {
      g[b + j] = x[b + 3 + j];
      g[b + 3 + j] = x[b + j];
    }
    return g;
  };
  return o;
}

Observable spin_quadratic(cplx w1, cplx w2, cplx w3, int site, std::string name) {
  Observable o;
  o.name = name.empty() ? "spin_quadratic" + site_suffix(site) : std::move(name);
  o.value = [=](const VecX& x) {
    check_site(x, site);
    const SpinVector s = collective_spin(site_of(x, site));
    return 0.5 * (w1 * s.X1 * s.X1 - w2 * s.X2 * s.X2 + w3 * s.X3 * s.X3);
  };
  o.gradient = [=](const VecX& x) {
    check_site(x, site);
    const PhasePoint pt = site_of(x, site);
    const SpinVector s = collective_spin(pt);
    const auto g = spin_gradients(pt);
    VecX out = VecX::Zero(x.size());
    out.segment<6>(6 * site) = w1 * s.X1 * g[0] - w2 * s.X2 * g[1] + w3 * s.X3 * g[2];
    return out;
  };
  return o;
}

Observable casimir(int site) {
  Observable o = spin_quadratic(2.0, 2.0, 2.0, site, "casimir" + site_suffix(site));
  return o;
}

Observable spin_pairing(int site_a, int site_b) {
  Observable o;
  o.name = "(X" + std::to_string(site_a) + ",X" + std::to_string(site_b) + ")";
  o.value = [=](const VecX& x) {
    check_site(x, site_a);
    check_site(x, site_b);
    return pairing(collective_spin(site_of(x, site_a)), collective_spin(site_of(x, site_b)));
  };
  o.gradient = [=](const VecX& x) {
    check_site(x, site_a);
    check_site(x, site_b);
    const PhasePoint pa = site_of(x, site_a), pb = site_of(x, site_b);
    const SpinVector sa = collective_spin(pa), sb = collective_spin(pb);
    const auto ga = spin_gradients(pa), gb = spin_gradients(pb);
    VecX out = VecX::Zero(x.size());
    out.segment<6>(6 * site_a) += sb.X1 * ga[0] - sb.X2 * ga[1] + sb.X3 * ga[2];
    out.segment<6>(6 * site_b) += sa.X1 * gb[0] - sa.X2 * gb[1] + sa.X3 * gb[2];
    return out;
  };
  return o;
}

}  // namespace obs

}  // namespace spinhiggs
