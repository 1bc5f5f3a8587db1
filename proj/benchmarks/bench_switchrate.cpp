// Microbenchmarks for the hot paths: matrix exponentials, gain searches,
// switched simulation, adaptive integration, and signal generation/checks.
#include <benchmark/benchmark.h>

#include "switchrate/builtin.hpp"
#include "switchrate/integrate.hpp"
#include "switchrate/matrix_exp.hpp"
#include "switchrate/rates.hpp"
#include "switchrate/signals.hpp"
#include "switchrate/subsystem.hpp"

using namespace switchrate;

namespace {

const SwitchedSystem& spirals() {
  static const SwitchedSystem sys = builtin_two_spiral_system();
  return sys;
}

const SwitchedSystem& cubic() {
  static const SwitchedSystem sys = builtin_cubic_damped_system();
  return sys;
}

void BM_MatrixExponential2x2(benchmark::State& state) {
  const Mat B = spirals().subsystems[0].matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_exponential(B, 1.0));
  }
}
BENCHMARK(BM_MatrixExponential2x2);

void BM_ComputeMExact(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_M(spirals(), 1.0));
  }
}
BENCHMARK(BM_ComputeMExact);

void BM_ComputeMSphere(benchmark::State& state) {
  GainSearchOptions opts;
  opts.samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        compute_M(spirals(), 1.0, GainMethod::SphereSearch, opts));
  }
}
BENCHMARK(BM_ComputeMSphere)->Arg(512)->Arg(4096);

void BM_FlowAdaptiveCubic(benchmark::State& state) {
  Vec x0(2);
  x0 << 1.2, -0.7;
  IntegratorConfig cfg;
  cfg.method = IntegrationMethod::RK45Adaptive;
  for (auto _ : state) {
    benchmark::DoNotOptimize(flow(cubic().subsystems[0], 2.0, x0, cfg));
  }
}
BENCHMARK(BM_FlowAdaptiveCubic);

void BM_SimulateSwitched(benchmark::State& state) {
  const auto u = generate_dwell_time(42, 2, 1.0, 20.0);
  Vec x0(2);
  x0 << 1.0, 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_switched(spirals(), u, x0, 20.0, {}, 0.1));
  }
}
BENCHMARK(BM_SimulateSwitched);

void BM_GenerateDwellSignal(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_dwell_time(seed++, 3, 0.5, 100.0));
  }
}
BENCHMARK(BM_GenerateDwellSignal);

void BM_VerifyAverageDwell(benchmark::State& state) {
  const auto u = generate_dwell_time(42, 3, 0.5, 500.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_average_dwell_time(u, 0.5, 1));
  }
}
BENCHMARK(BM_VerifyAverageDwell);

}  // namespace

BENCHMARK_MAIN();
