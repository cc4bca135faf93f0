#pragma once

#include <random>
#include <string>
#include <vector>

#include "naqjs/circuit.hpp"
#include "naqjs/hardware.hpp"
#include "naqjs/mapper.hpp"
#include "naqjs/partition.hpp"

namespace naqjs {

/// Policy weights and limits. Defaults follow the noise-model settings:
/// alpha=6, beta=4.5, gamma=1, eta=5/6, delta_t=360 s, repeats=3.
struct SchedulerConfig {
  double alpha = 6.0;    // width weight
  double beta = 4.5;     // shot weight
  double gamma = 1.0;    // submission-time weight
  double eta = 5.0 / 6.0;  // max fraction of physical qubits used per round
  double delta_t = 360.0;  // seconds per aging increment; +inf disables aging
  int repeats = 3;         // initial-mapping refinement rounds
  RouterConfig router;

  void validate() const;
};

/// Loads config overrides from a JSON object file; unknown keys are
/// rejected. Recognized keys: alpha, beta, gamma, eta, delta_t, repeats,
/// seed, shot_time_us, overhead_s.
struct TimeModel;
void load_config_file(const std::string& path, SchedulerConfig& cfg, TimeModel& time_model,
                      std::uint64_t& seed);

/// Min/max statistics of the current queue snapshot, used by the min-max
/// normalization of the priority score.
struct QueueStats {
  double n_min = 0, n_max = 0;
  double s_min = 0, s_max = 0;
  double t_min = 0, t_max = 0;

  static QueueStats over(const std::vector<const Job*>& queue);
};

/// Priority score: -alpha*S_n - beta*S_s - gamma*S_t + aging bonus, where
/// each S is the min-max normalized attribute (0 when max == min) and the
/// bonus is floor((now - submit) / delta_t).
double priority_score(const Job& job, const QueueStats& stats, const SchedulerConfig& cfg,
                      double now);

/// Stable sort of the queue in descending priority order; ties resolve to
/// the earlier submission, then the lower workload sequence number.
std::vector<const Job*> rearrange(const std::vector<const Job*>& queue,
                                  const SchedulerConfig& cfg, double now);

struct ScheduledJob {
  const Job* job = nullptr;
  Partition partition;
  RoutedCircuit routed;
  double epst = 0.0;       // EPST* with the round-aligned circuit time
  double t_c_ns = 0.0;     // own circuit time before ALAP padding
};

/// One parallel execution on the QPU.
struct ExecutionRound {
  std::vector<ScheduledJob> selected;
  std::uint64_t shots = 0;     // max over the selected jobs
  double start_time = 0.0;
  double end_time = 0.0;
  double aligned_t_c_ns = 0.0; // common measurement instant (ALAP padding)
};

/// Walks the queue in the given order and packs jobs into one round:
/// a job is selected when it fits the qubit budget (sum of widths <= eta*N)
/// and a partition can be grown on the remaining graph; its qubits are then
/// committed. Selected circuits are ALAP-aligned, so each job's EPST* uses
/// the round's maximum circuit time. An empty round means nothing fits.
/// `enforce_eta` disabled gives baselines the whole device (eta = 1).
ExecutionRound assemble_round(const std::vector<const Job*>& sorted_queue,
                              const HardwareModel& hw, const SchedulerConfig& cfg,
                              std::mt19937& rng, bool enforce_eta = true);

}  // namespace naqjs
