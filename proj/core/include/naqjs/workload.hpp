#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "naqjs/circuit.hpp"

namespace naqjs {

/// Workload generation parameters. The defaults mirror the congestion
/// protocol: 44 initial jobs at t=0, 400 later arrivals with inter-arrival
/// gaps of 0 or 1 second, shots uniform in [1000, 20000], synthetic
/// circuits of width 3..16 (mean about 6) and up to ~70 gates on average.
struct WorkloadParams {
  int initial_jobs = 44;
  int arrival_jobs = 400;
  std::uint64_t shots_min = 1000;
  std::uint64_t shots_max = 20000;
  Qubit width_min = 3;
  Qubit width_max = 16;
  int depth_cap = 100;
  double mean_gates = 70.0;
  std::vector<Circuit> corpus;  // sampled instead of synthesis when non-empty

  /// Named profiles: "noise-model" (defaults above) or "device"
  /// (shots 500..10000).
  static WorkloadParams profile(const std::string& name);
};

struct Workload {
  std::vector<Job> jobs;  // initial jobs first, then arrivals in time order
  std::uint64_t seed = 0;
};

/// Deterministic workload synthesis from a seed.
Workload generate_workload(const WorkloadParams& params, std::uint64_t seed);

/// One random circuit of the synthetic family.
Circuit synthesize_circuit(const WorkloadParams& params, std::mt19937& rng);

/// Workload JSONL: one job per line,
/// {"id": str, "t": float, "shots": int, "circuit": {...} | "path.qasm"}.
/// String circuit values are file references resolved against the JSONL
/// file's directory.
Workload load_workload_jsonl(const std::string& path);
void save_workload_jsonl(const Workload& w, const std::string& path);

/// Loads every .qasm and .json circuit in a directory (sorted by name).
std::vector<Circuit> load_corpus_dir(const std::string& dir);

}  // namespace naqjs
