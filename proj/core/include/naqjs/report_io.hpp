#pragma once

#include <string>
#include <vector>

#include "naqjs/sim.hpp"

namespace naqjs {

std::string report_to_json(const RunReport& report);
void save_report_json(const RunReport& report, const std::string& path);

/// Per-job CSV with header id,submit,start,complete,tat,width,shots,epst_star,round.
std::string per_job_csv(const RunReport& report);
void save_per_job_csv(const RunReport& report, const std::string& path);

/// Comparison table across policies/seeds, delta columns relative to the
/// FIFO run of the same seed (0 for FIFO itself, empty when FIFO absent).
/// Columns: policy,seed,qpu_time_s,delta_qpu_pct,tat_max_s,tat_avg_s,
/// delta_tat_avg_pct,tat_std_s,delta_tat_std_pct,rt_s,trf,est_pst_pct.
std::string comparison_csv(const std::vector<RunReport>& reports);
void save_comparison_csv(const std::vector<RunReport>& reports, const std::string& path);

}  // namespace naqjs
