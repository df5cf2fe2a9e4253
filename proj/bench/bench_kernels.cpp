#include <benchmark/benchmark.h>

#include <vector>

#include "heis/cmc_solver.hpp"
#include "heis/kernels.hpp"
#include "heis/numerics.hpp"
#include "heis/phase_map.hpp"

namespace {

using heis::kernels::Exec;

heis::PhaseMap band_map() {
  const heis::CmcParams params(heis::GroupDims(2), 1.0, 0.3);
  return heis::PhaseMap(params, heis::admissible_interval(params));
}

void BM_InvertArclength(benchmark::State& state, Exec exec) {
  const auto map = band_map();
  const auto s = heis::numerics::linspace(-map.half_period(), map.half_period(),
                                          static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(heis::kernels::invert_arclength(map, s, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_IntegrateCells(benchmark::State& state, Exec exec) {
  const auto map = band_map();
  const auto u = heis::numerics::linspace(map.phase_lo(), map.phase_hi(),
                                          static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(heis::kernels::integrate_cells(map, u, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RevolveVertices(benchmark::State& state, Exec exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = heis::numerics::linspace(0.5, 1.5, n);
  const auto t = heis::numerics::linspace(-1.0, 1.0, n);
  const auto theta = heis::numerics::linspace(0.0, 3.0, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(heis::kernels::revolve_vertices(x, t, theta, 256, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 256);
}

}  // namespace

BENCHMARK_CAPTURE(BM_InvertArclength, serial, Exec::serial)->Arg(2001)->Arg(8001);
BENCHMARK_CAPTURE(BM_InvertArclength, parallel, Exec::parallel)->Arg(2001)->Arg(8001);
BENCHMARK_CAPTURE(BM_IntegrateCells, serial, Exec::serial)->Arg(2001)->Arg(8001);
BENCHMARK_CAPTURE(BM_IntegrateCells, parallel, Exec::parallel)->Arg(2001)->Arg(8001);
BENCHMARK_CAPTURE(BM_RevolveVertices, serial, Exec::serial)->Arg(512)->Arg(4096);
BENCHMARK_CAPTURE(BM_RevolveVertices, parallel, Exec::parallel)->Arg(512)->Arg(4096);

BENCHMARK_MAIN();
