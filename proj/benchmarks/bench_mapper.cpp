#include <benchmark/benchmark.h>

#include <random>

#include "naqjs/mapper.hpp"
#include "naqjs/partition.hpp"
#include "naqjs/statevector.hpp"
#include "naqjs/workload.hpp"

using namespace naqjs;

namespace {

Circuit bench_circuit(std::mt19937& rng, Qubit width, int gates) {
  WorkloadParams p;
  p.width_min = width;
  p.width_max = width;
  p.mean_gates = gates;
  return synthesize_circuit(p, rng);
}

Partition grown(const HardwareModel& hw, const Circuit& c) {
  RemainingGraph remaining(hw);
  auto part = best_partition(c, remaining, hw);
  if (!part) throw Error("benchmark partition failed");
  return *part;
}

}  // namespace

static void BM_RouteRing16(benchmark::State& state) {
  const HardwareModel hw = builtin_topology("ring16");
  std::mt19937 rng(1);
  const Circuit c = bench_circuit(rng, static_cast<Qubit>(state.range(0)), 70);
  const Partition part = grown(hw, c);
  Mapping initial = part.qubits;
  for (auto _ : state) {
    benchmark::DoNotOptimize(route(c, part, initial, hw));
  }
}
BENCHMARK(BM_RouteRing16)->Arg(5)->Arg(9)->Arg(13);

static void BM_RouteGrid66(benchmark::State& state) {
  const HardwareModel hw = builtin_topology("grid66");
  std::mt19937 rng(2);
  const Circuit c = bench_circuit(rng, static_cast<Qubit>(state.range(0)), 70);
  const Partition part = grown(hw, c);
  Mapping initial = part.qubits;
  for (auto _ : state) {
    benchmark::DoNotOptimize(route(c, part, initial, hw));
  }
}
BENCHMARK(BM_RouteGrid66)->Arg(8)->Arg(16);

static void BM_InitialMapping(benchmark::State& state) {
  const HardwareModel hw = builtin_topology("ring16");
  std::mt19937 rng(3);
  const Circuit c = bench_circuit(rng, 8, 70);
  const Partition part = grown(hw, c);
  for (auto _ : state) {
    std::mt19937 run_rng(7);
    benchmark::DoNotOptimize(
        initial_mapping(c, part, hw, static_cast<int>(state.range(0)), run_rng));
  }
}
BENCHMARK(BM_InitialMapping)->Arg(1)->Arg(3);

static void BM_BestPartitionGrid66(benchmark::State& state) {
  const HardwareModel hw = builtin_topology("grid66");
  std::mt19937 rng(4);
  const Circuit c = bench_circuit(rng, static_cast<Qubit>(state.range(0)), 70);
  for (auto _ : state) {
    RemainingGraph remaining(hw);
    benchmark::DoNotOptimize(best_partition(c, remaining, hw));
  }
}
BENCHMARK(BM_BestPartitionGrid66)->Arg(6)->Arg(12);

static void BM_StatevectorOracle(benchmark::State& state) {
  const HardwareModel hw = builtin_topology("ring16");
  std::mt19937 rng(5);
  const Circuit c = bench_circuit(rng, 8, 60);
  const Partition part = grown(hw, c);
  const RoutedCircuit routed = route(c, part, part.qubits, hw);
  for (auto _ : state) {
    benchmark::DoNotOptimize(equivalent_under_permutation(c, routed));
  }
}
BENCHMARK(BM_StatevectorOracle);
