#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "naqjs/hardware.hpp"
#include "naqjs/scheduler.hpp"
#include "naqjs/workload.hpp"

namespace naqjs {

/// Raised when a workload cannot be executed on the given device/config.
class SimulationError : public Error {
public:
  using Error::Error;
};

enum class Policy { Fifo, FifoP, Naqjs };

Policy policy_from_name(const std::string& name);
const char* to_string(Policy p);

/// Wall-clock model of one execution round: shots * shot_time on the QPU
/// plus a fixed inter-execution overhead.
struct TimeModel {
  double shot_time_s = 200e-6;
  double overhead_s = 10.0;
};

struct JobRecord {
  std::string id;
  double submit = 0.0;
  double start = 0.0;
  double complete = 0.0;
  Qubit width = 0;
  std::uint64_t shots = 0;
  double epst_star = 0.0;
  int round = -1;
  std::vector<Qubit> partition;
};

struct RoundRecord {
  double start = 0.0;
  double end = 0.0;
  std::uint64_t shots = 0;
  std::vector<std::string> job_ids;
};

struct RunReport {
  std::string policy;
  std::uint64_t seed = 0;
  double qpu_time_s = 0.0;
  double tat_max_s = 0.0;
  double tat_avg_s = 0.0;
  double tat_std_s = 0.0;   // population standard deviation
  double trf = 1.0;
  double estimated_pst_avg = 0.0;
  std::size_t rounds = 0;
  double scheduler_runtime_s = 0.0;  // wall clock spent inside scheduling
  std::vector<JobRecord> per_job;
  std::vector<RoundRecord> round_log;
};

/// Fills the aggregate metric fields of a report from its per-job records
/// and round log.
void compute_metrics(RunReport& report, const TimeModel& time_model);

/// Discrete-event replay of the workload under one policy. FIFO runs one
/// job per round in submission order; FIFO-p packs rounds in submission
/// order without the eta cap; NAQJS rearranges by priority score and packs
/// under the eta budget. Throws Error when a job can never be placed
/// (wider than the device, disconnected remainder, or wider than eta*N
/// under NAQJS).
RunReport simulate(const Workload& workload, const HardwareModel& hw, Policy policy,
                   const SchedulerConfig& cfg, const TimeModel& time_model, std::uint64_t seed);

}  // namespace naqjs
