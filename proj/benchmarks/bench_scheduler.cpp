#include <benchmark/benchmark.h>

#include "naqjs/sim.hpp"
#include "naqjs/workload.hpp"

using namespace naqjs;

static void BM_Rearrange(benchmark::State& state) {
  WorkloadParams p;
  p.initial_jobs = static_cast<int>(state.range(0));
  p.arrival_jobs = 0;
  const Workload w = generate_workload(p, 1);
  std::vector<const Job*> queue;
  for (const auto& j : w.jobs) queue.push_back(&j);
  SchedulerConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rearrange(queue, cfg, 100.0));
  }
}
BENCHMARK(BM_Rearrange)->Arg(64)->Arg(444)->Arg(4096);

static void BM_AssembleRound(benchmark::State& state) {
  const HardwareModel hw = builtin_topology(state.range(1) == 0 ? "ring16" : "grid66");
  WorkloadParams p;
  p.initial_jobs = static_cast<int>(state.range(0));
  p.arrival_jobs = 0;
  p.width_max = 13;
  const Workload w = generate_workload(p, 2);
  std::vector<const Job*> queue;
  for (const auto& j : w.jobs) queue.push_back(&j);
  SchedulerConfig cfg;
  cfg.repeats = 1;
  for (auto _ : state) {
    std::mt19937 rng(3);
    benchmark::DoNotOptimize(assemble_round(rearrange(queue, cfg, 0.0), hw, cfg, rng));
  }
}
BENCHMARK(BM_AssembleRound)->Args({32, 0})->Args({32, 1})->Args({128, 1});

static void BM_SimulateSmallRun(benchmark::State& state) {
  const HardwareModel hw = builtin_topology("ring16");
  WorkloadParams p;
  p.initial_jobs = 8;
  p.arrival_jobs = 40;
  p.width_max = 13;
  const Workload w = generate_workload(p, 4);
  SchedulerConfig cfg;
  cfg.repeats = 1;
  const TimeModel tm;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(w, hw, Policy::Naqjs, cfg, tm, 4));
  }
}
BENCHMARK(BM_SimulateSmallRun);

BENCHMARK_MAIN();
