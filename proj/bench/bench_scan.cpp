#include <benchmark/benchmark.h>

#include "spinhiggs/flow/scan.hpp"
#include "spinhiggs/models/gaudin.hpp"
#include "spinhiggs/models/top.hpp"

using namespace spinhiggs;

namespace {

const TopParams kJ{cplx(1.3, 0.2), cplx(-0.7, 0.0), cplx(0.4, -0.3), std::nullopt};

// Dirac bracket {H2, H0} with analytic gradients
template <ScanResult (*Scan)(const Observable&, const Observable&, RealityClass, int,
                             std::uint64_t, int)>
void BM_TopScan(benchmark::State& state) {
  const Observable h2 = obs::spin_quadratic(1, 1, 1, 0, "H2");
  const Observable h0 = top_hamiltonian_observable(kJ);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Scan(h2, h0, RealityClass::TypeIII, n, 7, 1));
  state.SetItemsProcessed(state.iterations() * n);
}

// canonical bracket of two Gaudin H1's on finite-difference gradients
template <ScanResult (*Scan)(const Observable&, const Observable&, RealityClass, int,
                             std::uint64_t, int)>
void BM_GaudinScan(benchmark::State& state) {
  const std::vector<cplx> marks = {cplx(-1.0, 0.2), cplx(0.4, -0.5), cplx(1.3, 0.1)};
  Observable g1 = gaudin_observable(marks, 0, GaudinFlow::H1);
  Observable g2 = gaudin_observable(marks, 1, GaudinFlow::H1);
  g1.gradient = nullptr;
  g2.gradient = nullptr;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Scan(g1, g2, RealityClass::ComplexV, n, 7, 3));
  state.SetItemsProcessed(state.iterations() * n);
}

template <std::vector<double> (*Drift)(const TopParams&, RealityClass, int, std::uint64_t,
                                       const IntegratorOptions&)>
void BM_EnsembleDrift(benchmark::State& state) {
  IntegratorOptions opts;
  opts.dt = 1e-3;
  opts.t_end = 1.0;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Drift(kJ, RealityClass::TypeIII, n, 7, opts));
  state.SetItemsProcessed(state.iterations() * n);
}

}  // namespace

BENCHMARK(BM_TopScan<commutativity_scan_serial>)->Name("top_scan/serial")->Arg(1000)->Arg(10000)->UseRealTime();
BENCHMARK(BM_TopScan<commutativity_scan>)->Name("top_scan/omp")->Arg(1000)->Arg(10000)->UseRealTime();
BENCHMARK(BM_GaudinScan<commutativity_scan_serial>)->Name("gaudin_scan/serial")->Arg(200)->UseRealTime();
BENCHMARK(BM_GaudinScan<commutativity_scan>)->Name("gaudin_scan/omp")->Arg(200)->UseRealTime();
BENCHMARK(BM_EnsembleDrift<ensemble_energy_drift_serial>)->Name("ensemble_drift/serial")->Arg(16)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnsembleDrift<ensemble_energy_drift>)->Name("ensemble_drift/omp")->Arg(16)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
