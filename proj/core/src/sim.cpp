#include "naqjs/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace naqjs {

Policy policy_from_name(const std::string& name) {
  if (name == "fifo") return Policy::Fifo;
  if (name == "fifo-p" || name == "fifop") return Policy::FifoP;
  if (name == "naqjs") return Policy::Naqjs;
  throw Error("unknown policy: " + name + " (expected fifo, fifo-p, or naqjs)");
}

const char* to_string(Policy p) {
  switch (p) {
    case Policy::Fifo: return "fifo";
    case Policy::FifoP: return "fifo-p";
    case Policy::Naqjs: return "naqjs";
  }
  return "?";
}

void compute_metrics(RunReport& report, const TimeModel& time_model) {
  std::uint64_t serial_shots = 0;
  std::uint64_t round_shots = 0;
  for (const auto& jr : report.per_job) serial_shots += jr.shots;
  for (const auto& rr : report.round_log) round_shots += rr.shots;

  report.rounds = report.round_log.size();
  report.qpu_time_s = static_cast<double>(round_shots) * time_model.shot_time_s;
  report.trf = round_shots == 0
                   ? 1.0
                   : static_cast<double>(serial_shots) / static_cast<double>(round_shots);

  const std::size_t n = report.per_job.size();
  if (n == 0) return;
  double sum = 0.0, max = 0.0, pst = 0.0;
  for (const auto& jr : report.per_job) {
    const double tat = jr.complete - jr.submit;
    sum += tat;
    max = std::max(max, tat);
    pst += jr.epst_star;
  }
  report.tat_avg_s = sum / static_cast<double>(n);
  report.tat_max_s = max;
  report.estimated_pst_avg = pst / static_cast<double>(n);
  double var = 0.0;
  for (const auto& jr : report.per_job) {
    const double d = (jr.complete - jr.submit) - report.tat_avg_s;
    var += d * d;
  }
  report.tat_std_s = std::sqrt(var / static_cast<double>(n));
}

namespace {

std::vector<const Job*> submission_order(std::vector<const Job*> queue) {
  std::stable_sort(queue.begin(), queue.end(), [](const Job* a, const Job* b) {
    if (a->submit_time != b->submit_time) return a->submit_time < b->submit_time;
    return a->seq < b->seq;
  });
  return queue;
}

}  // namespace

RunReport simulate(const Workload& workload, const HardwareModel& hw, Policy policy,
                   const SchedulerConfig& cfg, const TimeModel& time_model, std::uint64_t seed) {
  cfg.validate();
  RunReport report;
  report.policy = to_string(policy);
  report.seed = seed;

  const double eta_budget = cfg.eta * static_cast<double>(hw.num_qubits());
  for (const Job& job : workload.jobs) {
    if (job.width() > hw.num_qubits())
      throw SimulationError("job " + job.id + " (width " + std::to_string(job.width()) +
                  ") is wider than the device; device too small");
    if (policy == Policy::Naqjs && static_cast<double>(job.width()) > eta_budget)
      throw SimulationError("job " + job.id + " (width " + std::to_string(job.width()) +
                  ") exceeds the eta budget " + std::to_string(eta_budget) +
                  " and can never be scheduled");
  }

  // arrival stream sorted by (t, seq)
  std::vector<const Job*> arrivals;
  for (const Job& j : workload.jobs) arrivals.push_back(&j);
  arrivals = submission_order(arrivals);

  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::vector<const Job*> queue;
  std::size_t next_arrival = 0;
  std::size_t completed = 0;
  double now = 0.0;
  using Clock = std::chrono::steady_clock;

  while (completed < workload.jobs.size()) {
    while (next_arrival < arrivals.size() && arrivals[next_arrival]->submit_time <= now)
      queue.push_back(arrivals[next_arrival++]);
    if (queue.empty()) {
      now = std::max(now, arrivals[next_arrival]->submit_time);
      continue;
    }

    const auto sched_begin = Clock::now();
    ExecutionRound round;
    switch (policy) {
      case Policy::Fifo: {
        const auto order = submission_order(queue);
        const std::vector<const Job*> head{order.front()};
        round = assemble_round(head, hw, cfg, rng, /*enforce_eta=*/false);
        break;
      }
      case Policy::FifoP:
        round = assemble_round(submission_order(queue), hw, cfg, rng, /*enforce_eta=*/false);
        break;
      case Policy::Naqjs:
        round = assemble_round(rearrange(queue, cfg, now), hw, cfg, rng, /*enforce_eta=*/true);
        break;
    }
    report.scheduler_runtime_s +=
        std::chrono::duration<double>(Clock::now() - sched_begin).count();

    if (round.selected.empty()) {
      // nothing in the queue fits even on an empty device
      if (next_arrival < arrivals.size()) {
        now = std::max(now, arrivals[next_arrival]->submit_time);
        continue;
      }
      throw SimulationError("job " + queue.front()->id + " cannot be placed on '" + hw.name +
                            "'; device too small");
    }

    round.start_time = now;
    round.end_time =
        now + static_cast<double>(round.shots) * time_model.shot_time_s + time_model.overhead_s;

    RoundRecord rr;
    rr.start = round.start_time;
    rr.end = round.end_time;
    rr.shots = round.shots;
    for (const auto& sj : round.selected) {
      rr.job_ids.push_back(sj.job->id);
      JobRecord jr;
      jr.id = sj.job->id;
      jr.submit = sj.job->submit_time;
      jr.start = round.start_time;
      jr.complete = round.end_time;
      jr.width = sj.job->width();
      jr.shots = sj.job->shots;
      jr.epst_star = sj.epst;
      jr.round = static_cast<int>(report.round_log.size());
      jr.partition = sj.partition.qubits;
      report.per_job.push_back(std::move(jr));
      queue.erase(std::find(queue.begin(), queue.end(), sj.job));
      ++completed;
    }
    report.round_log.push_back(std::move(rr));
    now = round.end_time;
  }

  compute_metrics(report, time_model);
  return report;
}

}  // namespace naqjs
