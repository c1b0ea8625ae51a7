#pragma once

// Seeded, class-respecting samplers for on-shell phase points.
//
// Point k of a run with seed s is drawn from its own generator seeded by
// splitmix64(s, k), so any subset of points can be regenerated (or computed
// in parallel) without replaying the others.

#include <cstdint>
#include <random>
#include <vector>

#include "spinhiggs/phase_space.hpp"

namespace spinhiggs {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index);

// Uniform in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double uniform01(std::mt19937_64& rng);
double uniform(std::mt19937_64& rng, double lo, double hi);

inline constexpr double kSampleMomentumRadius = 2.0;
inline constexpr double kSampleHyperbolicRadius = 2.0;
inline constexpr double kSampleImagSpread = 0.5;

// q on the class's c1 = 0 surface (unit sphere for TypeIII, hyperboloid patch
// |s| <= 2 for TypeIV, its complexification for ComplexV), p in a ball of
// radius 2, then the least-norm correction onto c2 = 0 and a Newton polish.
PhasePoint random_onshell(RealityClass cls, std::mt19937_64& rng);
PhasePoint random_onshell(RealityClass cls, std::uint64_t seed, std::uint64_t index);
std::vector<PhasePoint> sample_onshell(RealityClass cls, int n, std::uint64_t seed);

}  // namespace spinhiggs
