#include <benchmark/benchmark.h>

#include "summa/kernels.hpp"
#include "summa/regular_seq.hpp"

using namespace summa;

namespace {

RationalFunction euler_G() {
  return RationalFunction(Polynomial({Coefficient(0), Coefficient(-1)}), Polynomial({Coefficient(1), Coefficient(1)}));
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_LaplaceGrid(benchmark::State& state) {
  auto zs = segment_grid(0.02, 0.4, static_cast<int>(state.range(1)));
  auto G = euler_G();
  for (auto _ : state) benchmark::DoNotOptimize(laplace_grid(G, 0.0, zs, 1.0, {}, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * zs.size());
}

void BM_QLaplaceGrid(benchmark::State& state) {
  auto zs = segment_grid(0.005, 0.05, static_cast<int>(state.range(1)));
  auto G = euler_G();
  for (auto _ : state) benchmark::DoNotOptimize(q_laplace_grid(G, 0.0, zs, 2.0, {}, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * zs.size());
}

void BM_ThetaGrid(benchmark::State& state) {
  auto zs = segment_grid(Complex(0.1, 0.05), Complex(1e3, 20.0), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(theta_grid(zs, 1.5, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * zs.size());
}

void BM_MgPairScan(benchmark::State& state) {
  const int N = static_cast<int>(state.range(1));
  auto logs = SequenceM::gevrey(2, N).logs(N);
  for (auto _ : state) benchmark::DoNotOptimize(mg_log_constant(logs, N, exec_of(state)));
}

}  // namespace

// First argument: 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_LaplaceGrid)->ArgsProduct({{0, 1}, {64}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QLaplaceGrid)->ArgsProduct({{0, 1}, {32}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaGrid)->ArgsProduct({{0, 1}, {4096}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MgPairScan)->ArgsProduct({{0, 1}, {4000}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
