#include <benchmark/benchmark.h>

#include "wgm/coupling.hpp"
#include "wgm/modes.hpp"
#include "wgm/specfun.hpp"

namespace {

const wgm::SphereSystem kSmall{5.0, 1.46 * 1.46};
const wgm::SphereSystem kLarge{200.0, 1.46 * 1.46};

void BM_BesselJ(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wgm::bessel_j_sequence(n, 0.98 * n));
}
BENCHMARK(BM_BesselJ)->Arg(40)->Arg(2312)->Arg(3307);

void BM_BesselY(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wgm::bessel_y_sequence(n, 0.98 * n));
}
BENCHMARK(BM_BesselY)->Arg(40)->Arg(2312)->Arg(3307);

void BM_MieTermsLarge(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wgm::mie_terms(kLarge, wgm::cplx(1.8027, 0.0), 2500));
}
BENCHMARK(BM_MieTermsLarge);

void BM_FindModeSmall(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wgm::find_mode_near(wgm::Polarization::TM, kSmall, 39, 1.0968));
}
BENCHMARK(BM_FindModeSmall)->Unit(benchmark::kMillisecond);

void BM_PairCouplingLarge(benchmark::State& state) {
  const double w = 1.8027617431758973;
  const double r = 200.0 + 0.1 / w;
  const wgm::AxialDipolePair pair{kLarge, r, r, false, w};
  for (auto _ : state) benchmark::DoNotOptimize(wgm::pair_coupling(pair));
}
BENCHMARK(BM_PairCouplingLarge)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
