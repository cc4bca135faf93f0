#include "naqjs/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "naqjs/dag.hpp"
#include "naqjs/fidelity.hpp"
#include "naqjs/sim.hpp"

namespace naqjs {

void SchedulerConfig::validate() const {
  if (alpha < 0 || beta < 0 || gamma < 0) throw Error("priority weights must be non-negative");
  if (!(eta > 0.0 && eta <= 1.0)) throw Error("eta must be in (0, 1]");
  if (!(delta_t > 0.0)) throw Error("delta_t must be positive");
  if (repeats < 1) throw Error("repeats must be >= 1");
}

void load_config_file(const std::string& path, SchedulerConfig& cfg, TimeModel& time_model,
                      std::uint64_t& seed) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  for (const auto& [key, value] : j.items()) {
    if (key == "alpha") cfg.alpha = value.get<double>();
    else if (key == "beta") cfg.beta = value.get<double>();
    else if (key == "gamma") cfg.gamma = value.get<double>();
    else if (key == "eta") cfg.eta = value.get<double>();
    else if (key == "delta_t") cfg.delta_t = value.get<double>();
    else if (key == "repeats") cfg.repeats = value.get<int>();
    else if (key == "seed") seed = value.get<std::uint64_t>();
    else if (key == "shot_time_us") time_model.shot_time_s = value.get<double>() * 1e-6;
    else if (key == "overhead_s") time_model.overhead_s = value.get<double>();
    else throw Error("unknown config key: " + key);
  }
  cfg.validate();
}

QueueStats QueueStats::over(const std::vector<const Job*>& queue) {
  QueueStats st;
  bool first = true;
  for (const Job* j : queue) {
    const double n = static_cast<double>(j->width());
    const double s = static_cast<double>(j->shots);
    const double t = j->submit_time;
    if (first) {
      st.n_min = st.n_max = n;
      st.s_min = st.s_max = s;
      st.t_min = st.t_max = t;
      first = false;
    } else {
      st.n_min = std::min(st.n_min, n);
      st.n_max = std::max(st.n_max, n);
      st.s_min = std::min(st.s_min, s);
      st.s_max = std::max(st.s_max, s);
      st.t_min = std::min(st.t_min, t);
      st.t_max = std::max(st.t_max, t);
    }
  }
  return st;
}

namespace {

double normalized(double x, double lo, double hi) {
  return hi == lo ? 0.0 : (x - lo) / (hi - lo);
}

}  // namespace

double priority_score(const Job& job, const QueueStats& stats, const SchedulerConfig& cfg,
                      double now) {
  const double s_n = normalized(static_cast<double>(job.width()), stats.n_min, stats.n_max);
  const double s_s = normalized(static_cast<double>(job.shots), stats.s_min, stats.s_max);
  const double s_t = normalized(job.submit_time, stats.t_min, stats.t_max);
  double score = -cfg.alpha * s_n - cfg.beta * s_s - cfg.gamma * s_t;
  const double waited = now - job.submit_time;
  if (waited > 0 && std::isfinite(cfg.delta_t)) score += std::floor(waited / cfg.delta_t);
  return score;
}

std::vector<const Job*> rearrange(const std::vector<const Job*>& queue,
                                  const SchedulerConfig& cfg, double now) {
  if (queue.empty()) return {};
  const QueueStats stats = QueueStats::over(queue);
  std::vector<std::pair<double, const Job*>> scored;
  scored.reserve(queue.size());
  for (const Job* j : queue) scored.emplace_back(priority_score(*j, stats, cfg, now), j);
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    if (a.second->submit_time != b.second->submit_time)
      return a.second->submit_time < b.second->submit_time;
    return a.second->seq < b.second->seq;
  });
  std::vector<const Job*> out;
  out.reserve(scored.size());
  for (const auto& [score, j] : scored) out.push_back(j);
  return out;
}

ExecutionRound assemble_round(const std::vector<const Job*>& sorted_queue,
                              const HardwareModel& hw, const SchedulerConfig& cfg,
                              std::mt19937& rng, bool enforce_eta) {
  ExecutionRound round;
  RemainingGraph remaining(hw);
  const double budget =
      enforce_eta ? cfg.eta * static_cast<double>(hw.num_qubits()) : static_cast<double>(hw.num_qubits());
  std::uint64_t used = 0;

  for (const Job* job : sorted_queue) {
    if (static_cast<double>(used + job->width()) > budget) continue;
    auto part = best_partition(job->circuit, remaining, hw);
    if (!part) continue;
    auto mapped = initial_mapping(job->circuit, *part, hw, cfg.repeats, rng, cfg.router);
    remaining.allocate(part->qubits);
    used += job->width();

    ScheduledJob sj;
    sj.job = job;
    sj.partition = std::move(*part);
    sj.t_c_ns = circuit_time(mapped.routed.circuit, hw.cal.durations);
    sj.routed = std::move(mapped.routed);
    round.selected.push_back(std::move(sj));
    round.shots = std::max(round.shots, job->shots);
  }

  // ALAP alignment: all circuits measure at the round's end, so every job
  // decoheres for the round's maximum circuit time.
  for (const auto& sj : round.selected)
    round.aligned_t_c_ns = std::max(round.aligned_t_c_ns, sj.t_c_ns);
  for (auto& sj : round.selected) {
    sj.epst =
        epst_star(sj.routed.circuit, sj.routed.initial_mapping, hw, round.aligned_t_c_ns).epst_star;
  }
  return round;
}

}  // namespace naqjs
