#include "naqjs/report_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace naqjs {

std::string report_to_json(const RunReport& report) {
  nlohmann::json j;
  j["policy"] = report.policy;
  j["seed"] = report.seed;
  j["qpu_time_s"] = report.qpu_time_s;
  j["tat_max_s"] = report.tat_max_s;
  j["tat_avg_s"] = report.tat_avg_s;
  j["tat_std_s"] = report.tat_std_s;
  j["trf"] = report.trf;
  j["estimated_pst_avg"] = report.estimated_pst_avg;
  j["rounds"] = report.rounds;
  j["scheduler_runtime_s"] = report.scheduler_runtime_s;
  j["num_jobs"] = report.per_job.size();
  j["round_log"] = nlohmann::json::array();
  for (const auto& rr : report.round_log) {
    j["round_log"].push_back({{"start", rr.start},
                              {"end", rr.end},
                              {"shots", rr.shots},
                              {"jobs", rr.job_ids}});
  }
  j["per_job"] = nlohmann::json::array();
  for (const auto& jr : report.per_job) {
    j["per_job"].push_back({{"id", jr.id},
                            {"submit", jr.submit},
                            {"start", jr.start},
                            {"complete", jr.complete},
                            {"width", jr.width},
                            {"shots", jr.shots},
                            {"epst_star", jr.epst_star},
                            {"round", jr.round},
                            {"partition", jr.partition}});
  }
  return j.dump(2);
}

void save_report_json(const RunReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write report: " + path);
  out << report_to_json(report) << "\n";
}

std::string per_job_csv(const RunReport& report) {
  std::ostringstream os;
  os.precision(12);
  os << "id,submit,start,complete,tat,width,shots,epst_star,round\n";
  for (const auto& jr : report.per_job) {
    os << jr.id << ',' << jr.submit << ',' << jr.start << ',' << jr.complete << ','
       << (jr.complete - jr.submit) << ',' << jr.width << ',' << jr.shots << ',' << jr.epst_star
       << ',' << jr.round << "\n";
  }
  return os.str();
}

void save_per_job_csv(const RunReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write per-job csv: " + path);
  out << per_job_csv(report);
}

std::string comparison_csv(const std::vector<RunReport>& reports) {
  std::map<std::uint64_t, const RunReport*> fifo_by_seed;
  for (const auto& r : reports)
    if (r.policy == "fifo") fifo_by_seed[r.seed] = &r;

  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  os << "policy,seed,qpu_time_s,delta_qpu_pct,tat_max_s,tat_avg_s,delta_tat_avg_pct,"
        "tat_std_s,delta_tat_std_pct,rt_s,trf,est_pst_pct\n";
  auto delta_pct = [](double value, double base) {
    return base == 0.0 ? 0.0 : 100.0 * (value - base) / base;
  };
  for (const auto& r : reports) {
    const RunReport* base = nullptr;
    if (auto it = fifo_by_seed.find(r.seed); it != fifo_by_seed.end()) base = it->second;
    os << r.policy << ',' << r.seed << ',' << r.qpu_time_s << ',';
    if (base) os << delta_pct(r.qpu_time_s, base->qpu_time_s);
    os << ',' << r.tat_max_s << ',' << r.tat_avg_s << ',';
    if (base) os << delta_pct(r.tat_avg_s, base->tat_avg_s);
    os << ',' << r.tat_std_s << ',';
    if (base) os << delta_pct(r.tat_std_s, base->tat_std_s);
    os << ',' << r.scheduler_runtime_s << ',' << r.trf << ',' << 100.0 * r.estimated_pst_avg
       << "\n";
  }
  return os.str();
}

void save_comparison_csv(const std::vector<RunReport>& reports, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write comparison csv: " + path);
  out << comparison_csv(reports);
}

}  // namespace naqjs
