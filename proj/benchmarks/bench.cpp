#include <numbers>
#include <random>

#include <benchmark/benchmark.h>

#include "fockproj/dynamics.hpp"
#include "fockproj/fock_core.hpp"
#include "fockproj/histories.hpp"
#include "fockproj/phase_space.hpp"
#include "fockproj/projector.hpp"
#include "fockproj/special.hpp"

namespace {

using namespace fockproj;

void BM_LambdaProfile(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lambda_profile(10.0, count));
}
BENCHMARK(BM_LambdaProfile)->Arg(150)->Arg(1000);

void BM_LaguerreFunctions(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(special::laguerre_functions(3, 40.0, count));
}
BENCHMARK(BM_LaguerreFunctions)->Arg(128)->Arg(1024);

void BM_Displacement(benchmark::State& state) {
  const FockDim dim(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(displacement(PhasePoint{1.0, -0.5}, dim));
}
BENCHMARK(BM_Displacement)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_WignerGridCircular(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  const auto e = exact_projector(10, FockDim(64));
  const auto axis = uniform_axis(-8.0, 8.0, res);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_grid(e, axis, axis, 1));
  state.SetItemsProcessed(state.iterations() * res * res);
}
BENCHMARK(BM_WignerGridCircular)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_WignerGridDense(benchmark::State& state) {
  const auto e = displaced_projector(10, PhasePoint{1.5, -2.0}, FockDim(static_cast<int>(state.range(0))));
  const auto axis = uniform_axis(-8.0, 8.0, 41);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_grid(e, axis, axis, 1));
  state.SetItemsProcessed(state.iterations() * 41 * 41);
}
BENCHMARK(BM_WignerGridDense)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_HusimiGrid(benchmark::State& state) {
  const auto e = displaced_projector(10, PhasePoint{1.5, -2.0}, FockDim(96));
  const auto axis = uniform_axis(-8.0, 8.0, 101);
  for (auto _ : state) benchmark::DoNotOptimize(husimi_grid(e, axis, axis, 1));
}
BENCHMARK(BM_HusimiGrid)->Unit(benchmark::kMillisecond);

void BM_DecoherenceFunctional(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  const FockDim dim(96);
  std::vector<double> times;
  for (int i = 0; i < steps; ++i) times.push_back(0.7 * i);
  const auto rho = FockOperator::outer(number_state(0, dim), number_state(0, dim));
  const auto spec = classical_history_spec(5, PhasePoint{1.0, 1.5}, times, dim, rho);
  for (auto _ : state) benchmark::DoNotOptimize(decoherence_functional(spec, 1e-9, 1));
}
BENCHMARK(BM_DecoherenceFunctional)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
