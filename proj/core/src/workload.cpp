#include "naqjs/workload.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "naqjs/circuit_io.hpp"

namespace naqjs {

WorkloadParams WorkloadParams::profile(const std::string& name) {
  WorkloadParams p;
  if (name == "noise-model") {
    return p;
  }
  if (name == "device") {
    p.shots_min = 500;
    p.shots_max = 10000;
    return p;
  }
  throw Error("unknown workload profile: " + name);
}

Circuit synthesize_circuit(const WorkloadParams& params, std::mt19937& rng) {
  // Width: shifted geometric, truncated to [width_min, width_max]. With the
  // default p the mean sits near 6 for the 3..16 range.
  const double p_geom = 1.0 / (1.0 + (6.0 - static_cast<double>(params.width_min)));
  std::geometric_distribution<int> extra(p_geom);
  Qubit width = params.width_min + static_cast<Qubit>(extra(rng));
  width = std::min(width, params.width_max);
  width = std::max(width, params.width_min);

  Circuit c;
  c.n = width;

  std::geometric_distribution<int> gate_budget_dist(1.0 / params.mean_gates);
  const int budget = std::max(7, std::min(391, gate_budget_dist(rng) + 1));

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<Qubit> pick(0, width - 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::vector<int> depth(width, 0);

  for (int i = 0; i < budget; ++i) {
    if (width >= 2 && coin(rng) < 0.4) {
      Qubit a = pick(rng), b = pick(rng);
      while (b == a) b = pick(rng);
      const int d = std::max(depth[a], depth[b]) + 1;
      if (d > params.depth_cap) continue;
      depth[a] = depth[b] = d;
      c.gates.push_back(GateOp::cx(a, b));
    } else {
      const Qubit q = pick(rng);
      if (depth[q] + 1 > params.depth_cap) continue;
      ++depth[q];
      const double which = coin(rng);
      if (which < 0.4) c.gates.push_back(GateOp::x(q));
      else if (which < 0.7) c.gates.push_back(GateOp::sx(q));
      else c.gates.push_back(GateOp::rz(q, angle(rng)));
    }
  }
  for (Qubit q = 0; q < width; ++q) c.gates.push_back(GateOp::measure(q));
  return c;
}

Workload generate_workload(const WorkloadParams& params, std::uint64_t seed) {
  if (params.shots_min < 1 || params.shots_max < params.shots_min)
    throw Error("invalid shot range");
  if (params.width_min < 1 || params.width_max < params.width_min)
    throw Error("invalid width range");
  if (params.corpus.empty() && params.mean_gates <= 0)
    throw Error("no corpus and synthesis disabled");

  Workload w;
  w.seed = seed;
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::uniform_int_distribution<std::uint64_t> shots(params.shots_min, params.shots_max);
  std::uniform_int_distribution<int> gap(0, 1);
  std::uniform_int_distribution<std::size_t> corpus_pick(
      0, params.corpus.empty() ? 0 : params.corpus.size() - 1);

  auto next_circuit = [&]() -> Circuit {
    if (!params.corpus.empty()) return params.corpus[corpus_pick(rng)];
    return synthesize_circuit(params, rng);
  };

  const int total = params.initial_jobs + params.arrival_jobs;
  double t = 0.0;
  for (int i = 0; i < total; ++i) {
    Job job;
    char buf[16];
    std::snprintf(buf, sizeof buf, "job-%05d", i);
    job.id = buf;
    job.seq = static_cast<std::uint64_t>(i);
    job.circuit = next_circuit();
    job.shots = shots(rng);
    if (i < params.initial_jobs) {
      job.submit_time = 0.0;
    } else {
      t += static_cast<double>(gap(rng));
      job.submit_time = t;
    }
    w.jobs.push_back(std::move(job));
  }
  return w;
}

Workload load_workload_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open workload file: " + path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  Workload w;
  std::string line;
  std::uint64_t seq = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error("workload line " + std::to_string(lineno) + ": " + e.what());
    }
    Job job;
    job.id = j.at("id").is_string() ? j["id"].get<std::string>() : j["id"].dump();
    job.seq = seq++;
    job.shots = j.at("shots").get<std::uint64_t>();
    if (job.shots < 1) throw Error("workload line " + std::to_string(lineno) + ": shots must be >= 1");
    job.submit_time = j.at("t").get<double>();
    if (job.submit_time < 0)
      throw Error("workload line " + std::to_string(lineno) + ": negative submit time");
    const auto& jc = j.at("circuit");
    if (jc.is_string()) {
      job.circuit = load_circuit_file((base / jc.get<std::string>()).string());
    } else {
      job.circuit = parse_circuit(jc.dump(), CircuitFormat::Json);
    }
    w.jobs.push_back(std::move(job));
  }
  std::stable_sort(w.jobs.begin(), w.jobs.end(),
                   [](const Job& a, const Job& b) { return a.submit_time < b.submit_time; });
  for (std::uint64_t i = 0; i < w.jobs.size(); ++i) w.jobs[i].seq = i;
  return w;
}

void save_workload_jsonl(const Workload& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write workload file: " + path);
  for (const auto& job : w.jobs) {
    nlohmann::json j;
    j["id"] = job.id;
    j["t"] = job.submit_time;
    j["shots"] = job.shots;
    j["circuit"] = nlohmann::json::parse(serialize_circuit(job.circuit, CircuitFormat::Json));
    out << j.dump() << "\n";
  }
}

std::vector<Circuit> load_corpus_dir(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".qasm" || ext == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Circuit> corpus;
  for (const auto& f : files) corpus.push_back(load_circuit_file(f.string()));
  if (corpus.empty()) throw Error("no .qasm or .json circuits under " + dir);
  return corpus;
}

}  // namespace naqjs
