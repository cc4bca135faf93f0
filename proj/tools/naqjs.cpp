// naqjs command line front end: workload generation, policy simulation,
// parameter sweeps, and routing verification. Exit codes: 0 success,
// 1 configuration/usage error, 2 simulation error, 3 verification failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "naqjs/circuit_io.hpp"
#include "naqjs/report_io.hpp"
#include "naqjs/sim.hpp"
#include "naqjs/statevector.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitSimulation = 2;
constexpr int kExitVerification = 3;

struct CommonOpts {
  std::string hardware = "ring16";
  std::string config_file;
  std::uint64_t seed = 1;
  naqjs::SchedulerConfig cfg;
  naqjs::TimeModel time_model;

  void apply_config_file() {
    if (!config_file.empty()) naqjs::load_config_file(config_file, cfg, time_model, seed);
  }
};

std::string default_output_dir() {
  if (const char* env = std::getenv("NAQJS_OUTPUT_DIR")) return env;
  return "out";
}

double parse_fraction(const std::string& text) {
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const double num = std::stod(text.substr(0, slash));
    const double den = std::stod(text.substr(slash + 1));
    if (den == 0) throw naqjs::Error("zero denominator in fraction: " + text);
    return num / den;
  }
  return std::stod(text);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

naqjs::Workload make_workload(const std::string& workload_path, const std::string& profile,
                              const naqjs::WorkloadParams& params, std::uint64_t seed) {
  if (!workload_path.empty()) return naqjs::load_workload_jsonl(workload_path);
  naqjs::WorkloadParams p = naqjs::WorkloadParams::profile(profile);
  p.initial_jobs = params.initial_jobs;
  p.arrival_jobs = params.arrival_jobs;
  if (params.shots_min != 0) p.shots_min = params.shots_min;
  if (params.shots_max != 0) p.shots_max = params.shots_max;
  if (params.width_min != 0) p.width_min = params.width_min;
  if (params.width_max != 0) p.width_max = params.width_max;
  p.corpus = params.corpus;
  return naqjs::generate_workload(p, seed);
}

int run_generate(const std::string& profile, naqjs::WorkloadParams params, std::uint64_t seed,
                 const std::string& corpus_dir, const std::string& out_path) {
  naqjs::WorkloadParams p = naqjs::WorkloadParams::profile(profile);
  p.initial_jobs = params.initial_jobs;
  p.arrival_jobs = params.arrival_jobs;
  if (params.shots_min != 0) p.shots_min = params.shots_min;
  if (params.shots_max != 0) p.shots_max = params.shots_max;
  if (params.width_min != 0) p.width_min = params.width_min;
  if (params.width_max != 0) p.width_max = params.width_max;
  if (!corpus_dir.empty()) p.corpus = naqjs::load_corpus_dir(corpus_dir);
  const naqjs::Workload w = naqjs::generate_workload(p, seed);
  naqjs::save_workload_jsonl(w, out_path);
  std::cout << "wrote " << w.jobs.size() << " jobs to " << out_path << "\n";
  return 0;
}

int run_simulations(CommonOpts& common, const std::string& workload_path,
                    const std::string& profile, const naqjs::WorkloadParams& gen_params,
                    const std::string& policies_arg, const std::string& seeds_arg,
                    const std::string& out_dir) {
  common.apply_config_file();
  const naqjs::HardwareModel hw = naqjs::resolve_hardware(common.hardware);

  std::vector<naqjs::Policy> policies;
  for (const auto& name : split_list(policies_arg))
    policies.push_back(naqjs::policy_from_name(name));
  if (policies.empty()) throw naqjs::Error("at least one policy required");

  std::vector<std::uint64_t> seeds;
  for (const auto& s : split_list(seeds_arg)) seeds.push_back(std::stoull(s));
  if (seeds.empty()) seeds.push_back(common.seed);

  std::filesystem::create_directories(out_dir);
  std::vector<naqjs::RunReport> reports;
  for (const std::uint64_t seed : seeds) {
    const naqjs::Workload w = make_workload(workload_path, profile, gen_params, seed);
    for (const naqjs::Policy policy : policies) {
      naqjs::RunReport rep = naqjs::simulate(w, hw, policy, common.cfg, common.time_model, seed);
      const std::string stem =
          std::string(naqjs::to_string(policy)) + "_s" + std::to_string(seed);
      naqjs::save_report_json(rep, out_dir + "/report_" + stem + ".json");
      naqjs::save_per_job_csv(rep, out_dir + "/jobs_" + stem + ".csv");
      std::cout << rep.policy << " seed=" << seed << ": qpu_time=" << rep.qpu_time_s
                << "s tat_avg=" << rep.tat_avg_s << "s trf=" << rep.trf
                << " pst=" << 100.0 * rep.estimated_pst_avg << "%\n";
      reports.push_back(std::move(rep));
    }
  }
  naqjs::save_comparison_csv(reports, out_dir + "/comparison.csv");
  std::cout << "comparison table: " << out_dir << "/comparison.csv\n";
  return 0;
}

int run_sweep(CommonOpts& common, const std::string& workload_path, const std::string& profile,
              const naqjs::WorkloadParams& gen_params, const std::string& param,
              const std::string& values_arg, const std::string& seeds_arg,
              const std::string& out_dir) {
  common.apply_config_file();
  const naqjs::HardwareModel base_hw = naqjs::resolve_hardware(common.hardware);

  std::vector<std::uint64_t> seeds;
  for (const auto& s : split_list(seeds_arg)) seeds.push_back(std::stoull(s));
  if (seeds.empty()) seeds.push_back(common.seed);

  std::filesystem::create_directories(out_dir);
  std::ofstream csv(out_dir + "/sweep_" + param + ".csv");
  csv << "param,value,seed,qpu_time_s,tat_max_s,tat_avg_s,tat_std_s,trf,est_pst_pct,rt_s\n";
  csv.precision(10);

  for (const auto& value_text : split_list(values_arg)) {
    const double value = parse_fraction(value_text);
    naqjs::SchedulerConfig cfg = common.cfg;
    naqjs::HardwareModel hw = base_hw;
    if (param == "alpha") cfg.alpha = value;
    else if (param == "beta") cfg.beta = value;
    else if (param == "gamma") cfg.gamma = value;
    else if (param == "eta") cfg.eta = value;
    else if (param == "delta-t") cfg.delta_t = value;
    else if (param == "noise") hw = naqjs::scale_noise(base_hw, value);
    else throw naqjs::Error("unknown sweep parameter: " + param);

    for (const std::uint64_t seed : seeds) {
      const naqjs::Workload w = make_workload(workload_path, profile, gen_params, seed);
      const naqjs::RunReport rep =
          naqjs::simulate(w, hw, naqjs::Policy::Naqjs, cfg, common.time_model, seed);
      csv << param << ',' << value << ',' << seed << ',' << rep.qpu_time_s << ','
          << rep.tat_max_s << ',' << rep.tat_avg_s << ',' << rep.tat_std_s << ',' << rep.trf
          << ',' << 100.0 * rep.estimated_pst_avg << ',' << rep.scheduler_runtime_s << "\n";
      std::cout << param << "=" << value_text << " seed=" << seed
                << ": tat_avg=" << rep.tat_avg_s << "s tat_std=" << rep.tat_std_s
                << "s pst=" << 100.0 * rep.estimated_pst_avg << "%\n";
    }
  }
  std::cout << "sweep series: " << out_dir << "/sweep_" << param << ".csv\n";
  return 0;
}

int run_verify(CommonOpts& common, const std::string& workload_path,
               const std::string& circuit_path) {
  common.apply_config_file();
  const naqjs::HardwareModel hw = naqjs::resolve_hardware(common.hardware);

  std::vector<std::pair<std::string, naqjs::Circuit>> circuits;
  if (!circuit_path.empty()) {
    circuits.emplace_back(circuit_path, naqjs::load_circuit_file(circuit_path));
  } else {
    const naqjs::Workload w = naqjs::load_workload_jsonl(workload_path);
    for (const auto& job : w.jobs) circuits.emplace_back(job.id, job.circuit);
  }

  std::mt19937 rng(static_cast<std::mt19937::result_type>(common.seed));
  int failures = 0;
  for (const auto& [name, circuit] : circuits) {
    naqjs::RemainingGraph remaining(hw);
    const auto part = naqjs::best_partition(circuit, remaining, hw);
    if (!part) {
      std::cout << name << ": FAIL (no partition on " << hw.name << ")\n";
      ++failures;
      continue;
    }
    const auto mapped =
        naqjs::initial_mapping(circuit, *part, hw, common.cfg.repeats, rng, common.cfg.router);
    const auto check = naqjs::check_routed(circuit, mapped.routed, hw);
    if (!check.checked_equivalence)
      std::cerr << "warning: " << name << " is wider than the simulation limit, legality only\n";
    if (check.ok()) {
      std::cout << name << ": ok (swaps=" << mapped.routed.swap_count
                << " bridges=" << mapped.routed.bridge_count << ")\n";
    } else {
      std::cout << name << ": FAIL (" << (check.legal ? "not equivalent" : "illegal 2q gate")
                << ")\n";
      ++failures;
    }
  }
  if (failures > 0) {
    std::cout << failures << "/" << circuits.size() << " circuits failed verification\n";
    return kExitVerification;
  }
  std::cout << "all " << circuits.size() << " circuits verified\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noise-aware quantum job scheduler and simulator"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string out_dir = default_output_dir();
  std::string workload_path, profile = "noise-model", corpus_dir;
  naqjs::WorkloadParams gen;
  gen.shots_min = gen.shots_max = 0;   // 0 = keep profile default
  gen.width_min = gen.width_max = 0;
  std::string policies = "fifo,fifo-p,naqjs";
  std::string seeds_arg, param, values;
  std::string circuit_path, gen_out = "workload.jsonl";
  std::string eta_text;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--hardware", common.hardware, "builtin name (ring16, chain16, grid66) or calibration JSON path");
    cmd->add_option("--config", common.config_file, "scheduler config JSON file");
    cmd->add_option("--seed", common.seed, "base RNG seed");
    cmd->add_option("--alpha", common.cfg.alpha, "width weight");
    cmd->add_option("--beta", common.cfg.beta, "shot weight");
    cmd->add_option("--gamma", common.cfg.gamma, "submission-time weight");
    cmd->add_option("--eta", eta_text, "max qubit-usage fraction (accepts a/b)");
    cmd->add_option("--delta-t", common.cfg.delta_t, "aging interval in seconds");
    cmd->add_option("--repeats", common.cfg.repeats, "initial-mapping refinement rounds");
    cmd->add_option("--shot-time-us", [&common](const std::vector<std::string>& v) {
      common.time_model.shot_time_s = std::stod(v[0]) * 1e-6;
      return true;
    }, "per-shot time in microseconds");
    cmd->add_option("--overhead-s", common.time_model.overhead_s, "inter-round overhead in seconds");
  };
  auto add_workload_opts = [&](CLI::App* cmd) {
    cmd->add_option("--workload", workload_path, "workload JSONL path (overrides generation)");
    cmd->add_option("--profile", profile, "generation profile: noise-model or device");
    cmd->add_option("--initial", gen.initial_jobs, "initial jobs at t=0");
    cmd->add_option("--arrivals", gen.arrival_jobs, "jobs arriving after t=0");
    cmd->add_option("--shots-min", gen.shots_min, "min shots");
    cmd->add_option("--shots-max", gen.shots_max, "max shots");
    cmd->add_option("--width-min", gen.width_min, "min circuit width");
    cmd->add_option("--width-max", gen.width_max, "max circuit width");
  };

  CLI::App* generate = app.add_subcommand("generate", "write a workload JSONL file");
  add_workload_opts(generate);
  generate->add_option("--seed", common.seed, "RNG seed");
  generate->add_option("--corpus", corpus_dir, "directory of .qasm/.json circuits to sample");
  generate->add_option("--out", gen_out, "output JSONL path");

  CLI::App* run = app.add_subcommand("run", "simulate policies and write reports");
  add_common(run);
  add_workload_opts(run);
  run->add_option("--policies", policies, "comma list of fifo,fifo-p,naqjs");
  run->add_option("--seeds", seeds_arg, "comma list of seeds (default: --seed)");
  run->add_option("--out", out_dir, "output directory");

  CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter under NAQJS");
  add_common(sweep);
  add_workload_opts(sweep);
  sweep->add_option("--param", param, "alpha|beta|gamma|eta|delta-t|noise")->required();
  sweep->add_option("--values", values, "comma list of values (fractions allowed)")->required();
  sweep->add_option("--seeds", seeds_arg, "comma list of seeds");
  sweep->add_option("--out", out_dir, "output directory");

  CLI::App* verify = app.add_subcommand("verify", "route circuits and check oracle equivalence");
  add_common(verify);
  verify->add_option("--workload", workload_path, "workload JSONL to verify");
  verify->add_option("--circuit", circuit_path, "single circuit file to verify");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!eta_text.empty()) common.cfg.eta = parse_fraction(eta_text);
    if (generate->parsed())
      return run_generate(profile, gen, common.seed, corpus_dir, gen_out);
    if (run->parsed())
      return run_simulations(common, workload_path, profile, gen, policies, seeds_arg, out_dir);
    if (sweep->parsed())
      return run_sweep(common, workload_path, profile, gen, param, values, seeds_arg, out_dir);
    if (verify->parsed()) {
      if (workload_path.empty() && circuit_path.empty())
        throw naqjs::Error("verify needs --workload or --circuit");
      return run_verify(common, workload_path, circuit_path);
    }
  } catch (const naqjs::SimulationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSimulation;
  } catch (const naqjs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
