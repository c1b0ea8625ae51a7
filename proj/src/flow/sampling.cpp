#include "spinhiggs/flow/sampling.hpp"

#include <cmath>

namespace spinhiggs {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(stream_seed(seed, index));
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

namespace {

// Uniform point in the d-ball of radius r, by rejection from the cube.
template <int D>
std::array<double, D> ball(std::mt19937_64& rng, double r) {
  for (;;) {
    std::array<double, D> v;
    double n2 = 0.0;
    for (double& c : v) {
      c = uniform(rng, -1.0, 1.0);
      n2 += c * c;
    }
    if (n2 <= 1.0) {
      for (double& c : v) c *= r;
      return v;
    }
  }
}

}  // namespace

PhasePoint random_onshell(RealityClass cls, std::mt19937_64& rng) {
  PhasePoint pt;
  pt.cls = cls;
  const double R = kSampleMomentumRadius;
  switch (cls) {
    case RealityClass::TypeIII: {
      const double ct = uniform(rng, -1.0, 1.0);
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      const double ph = uniform(rng, 0.0, 2.0 * kPi);
      pt.q0 = ct;
      pt.q1 = kI * (st * std::cos(ph));
      pt.q3 = kI * (st * std::sin(ph));
      const auto b = ball<3>(rng, R);
      pt.p0 = b[0];
      pt.p1 = kI * b[1];
      pt.p3 = kI * b[2];
      break;
    }
    case RealityClass::TypeIV: {
      const double s = uniform(rng, 0.0, kSampleHyperbolicRadius);
      const double ph = uniform(rng, 0.0, 2.0 * kPi);
      pt.q0 = std::cosh(s);
      pt.q1 = std::sinh(s) * std::cos(ph);
      pt.q3 = std::sinh(s) * std::sin(ph);
      const auto b = ball<3>(rng, R);
      pt.p0 = b[0];
      pt.p1 = b[1];
      pt.p3 = b[2];
      break;
    }
    case RealityClass::ComplexV: {
      const cplx s(uniform(rng, -kSampleHyperbolicRadius, kSampleHyperbolicRadius),
                   uniform(rng, -kSampleImagSpread, kSampleImagSpread));
      const cplx ph(uniform(rng, 0.0, 2.0 * kPi), uniform(rng, -kSampleImagSpread, kSampleImagSpread));
      pt.q0 = std::cosh(s);
      pt.q1 = std::sinh(s) * std::cos(ph);
      pt.q3 = std::sinh(s) * std::sin(ph);
      const auto b = ball<6>(rng, R);
      pt.p0 = cplx(b[0], b[1]);
      pt.p1 = cplx(b[2], b[3]);
      pt.p3 = cplx(b[4], b[5]);
      break;
    }
  }
  // Least-norm step onto c2 = 0.
  const cplx c2 = constraints(pt).c2;
  const double qq = std::norm(pt.q0) + std::norm(pt.q1) + std::norm(pt.q3);
  const cplx t = c2 / qq;
  pt.p0 -= t * std::conj(pt.q0);
  pt.p1 -= t * std::conj(pt.q1);
  pt.p3 -= t * std::conj(pt.q3);
  return project_onshell(pt, 1e-13);
}

PhasePoint random_onshell(RealityClass cls, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng = make_stream(seed, index);
  return random_onshell(cls, rng);
}

std::vector<PhasePoint> sample_onshell(RealityClass cls, int n, std::uint64_t seed) {
  std::vector<PhasePoint> out;
  out.reserve(std::max(n, 0));
  for (int k = 0; k < n; ++k) out.push_back(random_onshell(cls, seed, static_cast<std::uint64_t>(k)));
  return out;
}

}  // namespace spinhiggs
