#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "pdmplab/analytics.hpp"
#include "pdmplab/couplings.hpp"
#include "pdmplab/montecarlo.hpp"
#include "pdmplab/processes.hpp"
#include "pdmplab/rng.hpp"

using namespace pdmplab;

static void BM_PhiloxU64(benchmark::State& state) {
  RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rng.next_u64());
}
BENCHMARK(BM_PhiloxU64);

static void BM_TcpJumpTime(benchmark::State& state) {
  RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_tcp_jump_time(1.3, rng));
}
BENCHMARK(BM_TcpJumpTime);

static void BM_SimulatePathTcpVariable(benchmark::State& state) {
  const double horizon = static_cast<double>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    RngStream rng(7, stream++);
    benchmark::DoNotOptimize(
        simulate_path(ModelSpec::tcp_variable(), 0.0, horizon, rng));
  }
}
BENCHMARK(BM_SimulatePathTcpVariable)->Arg(10)->Arg(100);

static void BM_SimulatePathStorage(benchmark::State& state) {
  std::uint64_t stream = 0;
  for (auto _ : state) {
    RngStream rng(7, stream++);
    benchmark::DoNotOptimize(
        simulate_path(ModelSpec::storage(1.0, 2.0), 1.0, 50.0, rng));
  }
}
BENCHMARK(BM_SimulatePathStorage);

static void BM_WassersteinCoupling(benchmark::State& state) {
  std::uint64_t stream = 0;
  for (auto _ : state) {
    RngStream rng(7, stream++);
    benchmark::DoNotOptimize(simulate_wasserstein_coupling(2.0, 10.0, 10.0, rng));
  }
}
BENCHMARK(BM_WassersteinCoupling);

static void BM_CoalescenceAttempt(benchmark::State& state) {
  std::uint64_t stream = 0;
  for (auto _ : state) {
    RngStream rng(7, stream++);
    benchmark::DoNotOptimize(attempt_coalescence_tcp(1.05, 1.0, 3.0, rng));
  }
}
BENCHMARK(BM_CoalescenceAttempt);

static void BM_InvariantDensity(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariant_density(x, 1e-12));
    x = x < 4.0 ? x + 0.1 : 0.1;
  }
}
BENCHMARK(BM_InvariantDensity);

static void BM_EmpiricalW1(benchmark::State& state) {
  const std::size_t n = 100000;
  std::vector<double> a(n), b(n);
  RngStream rng(3, 0);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = rng.exponential();
    b[i] = rng.exponential();
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (auto _ : state) benchmark::DoNotOptimize(empirical_w1(a, b));
}
BENCHMARK(BM_EmpiricalW1);

static void BM_ContractionConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(contraction_constants(0.5));
}
BENCHMARK(BM_ContractionConstants);

BENCHMARK_MAIN();
