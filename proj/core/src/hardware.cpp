#include "naqjs/hardware.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <queue>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace naqjs {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kErrorCap = 0.75;

// Device averages used to seed built-in calibrations.
constexpr double kAvgR1q = 0.9985;
constexpr double kAvgR2q = 0.9707;
constexpr double kAvgRo = 0.9397;
constexpr double kAvgT1Us = 27.35;
constexpr double kAvgT2Us = 20.0;
}  // namespace

void CouplingGraph::add_edge(Qubit a, Qubit b) {
  if (a == b) throw Error("self-loop edge on qubit " + std::to_string(a));
  if (a > b) std::swap(a, b);
  if (b >= num_qubits) throw Error("edge endpoint " + std::to_string(b) + " out of range");
  if (!has_edge(a, b)) edges.emplace_back(a, b);
}

bool CouplingGraph::has_edge(Qubit a, Qubit b) const {
  if (a > b) std::swap(a, b);
  return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

std::vector<std::vector<Qubit>> CouplingGraph::adjacency() const {
  std::vector<std::vector<Qubit>> adj(num_qubits);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

bool CouplingGraph::is_connected() const {
  if (num_qubits == 0) return true;
  const auto adj = adjacency();
  std::vector<bool> seen(num_qubits, false);
  std::deque<Qubit> todo{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const Qubit q = todo.front();
    todo.pop_front();
    for (Qubit nb : adj[q]) {
      if (!seen[nb]) {
        seen[nb] = true;
        ++count;
        todo.push_back(nb);
      }
    }
  }
  return count == num_qubits;
}

double Calibration::edge_reliability(Qubit a, Qubit b) const {
  if (a > b) std::swap(a, b);
  for (const auto& [edge, r] : r_2q)
    if (edge.first == a && edge.second == b) return r;
  throw Error("no two-qubit reliability for edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

double HardwareModel::avg_r1q() const {
  double s = 0;
  for (double r : cal.r_1q) s += r;
  return cal.r_1q.empty() ? 1.0 : s / static_cast<double>(cal.r_1q.size());
}

double HardwareModel::avg_r2q() const {
  double s = 0;
  for (const auto& [e, r] : cal.r_2q) s += r;
  return cal.r_2q.empty() ? 1.0 : s / static_cast<double>(cal.r_2q.size());
}

double HardwareModel::avg_ro() const {
  double s = 0;
  for (double r : cal.r_ro) s += r;
  return cal.r_ro.empty() ? 1.0 : s / static_cast<double>(cal.r_ro.size());
}

void validate_hardware(const HardwareModel& hw) {
  const Qubit n = hw.graph.num_qubits;
  auto check_size = [&](const std::vector<double>& v, const char* what) {
    if (v.size() != n)
      throw Error(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " +
                  std::to_string(n));
  };
  check_size(hw.cal.r_1q, "r_1q");
  check_size(hw.cal.r_ro, "r_ro");
  check_size(hw.cal.t1_us, "t1_us");
  check_size(hw.cal.t2_us, "t2_us");
  auto check_rel = [](double r, const std::string& what) {
    if (!(r > 0.0 && r <= 1.0)) throw Error(what + " reliability " + std::to_string(r) + " outside (0,1]");
  };
  for (Qubit q = 0; q < n; ++q) {
    check_rel(hw.cal.r_1q[q], "r_1q[" + std::to_string(q) + "]");
    check_rel(hw.cal.r_ro[q], "r_ro[" + std::to_string(q) + "]");
    if (hw.cal.t1_us[q] <= 0 || hw.cal.t2_us[q] <= 0)
      throw Error("T1/T2 must be positive on qubit " + std::to_string(q));
    if (hw.cal.t2_us[q] > 2.0 * hw.cal.t1_us[q])
      throw Error("T2 > 2*T1 on qubit " + std::to_string(q));
  }
  for (const auto& [a, b] : hw.graph.edges)
    check_rel(hw.cal.edge_reliability(a, b),
              "r_2q[" + std::to_string(a) + "-" + std::to_string(b) + "]");
  if (!hw.graph.is_connected())
    std::cerr << "warning: coupling graph of '" << hw.name << "' is not connected\n";
}

BuiltinTopology builtin_topology_from_name(const std::string& name) {
  if (name == "ring16") return BuiltinTopology::Ring16;
  if (name == "chain16") return BuiltinTopology::Chain16;
  if (name == "grid66") return BuiltinTopology::Grid66;
  throw Error("unknown builtin topology: " + name);
}

namespace {

CouplingGraph guadalupe_graph() {
  CouplingGraph g;
  g.num_qubits = 16;
  const std::pair<Qubit, Qubit> edges[] = {{0, 1}, {1, 2},  {1, 4},   {2, 3},   {3, 5},   {4, 7},
                                           {5, 8}, {6, 7},  {7, 10},  {8, 9},   {8, 11},  {10, 12},
                                           {11, 14}, {12, 13}, {12, 15}, {13, 14}};
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

CouplingGraph grid_graph(Qubit rows, Qubit cols) {
  CouplingGraph g;
  g.num_qubits = rows * cols;
  for (Qubit r = 0; r < rows; ++r) {
    for (Qubit c = 0; c < cols; ++c) {
      const Qubit q = r * cols + c;
      if (c + 1 < cols) g.add_edge(q, q + 1);
      if (r + 1 < rows) g.add_edge(q, q + cols);
    }
  }
  return g;
}

// Jittered calibration around the device averages. RNG is fixed per
// topology so built-in models are identical across runs and processes.
Calibration seeded_calibration(const CouplingGraph& graph, std::uint64_t seed) {
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::uniform_real_distribution<double> jitter(0.8, 1.2);
  Calibration cal;
  const Qubit n = graph.num_qubits;
  auto jittered_rel = [&](double mean_r) { return 1.0 - (1.0 - mean_r) * jitter(rng); };
  for (Qubit q = 0; q < n; ++q) {
    cal.r_1q.push_back(jittered_rel(kAvgR1q));
    cal.r_ro.push_back(jittered_rel(kAvgRo));
    cal.t1_us.push_back(kAvgT1Us * jitter(rng));
    cal.t2_us.push_back(kAvgT2Us * jitter(rng));
  }
  for (const auto& e : graph.edges) cal.r_2q.emplace_back(e, jittered_rel(kAvgR2q));
  cal.durations = GateDurations{};
  return cal;
}

}  // namespace

HardwareModel builtin_topology(BuiltinTopology which) {
  HardwareModel hw;
  switch (which) {
    case BuiltinTopology::Ring16:
      hw.name = "ring16";
      hw.graph = guadalupe_graph();
      hw.cal = seeded_calibration(hw.graph, 0x9a1601);
      break;
    case BuiltinTopology::Chain16: {
      // same device with Q1 disconnected from Q4; noise data unchanged
      HardwareModel ring = builtin_topology(BuiltinTopology::Ring16);
      hw.name = "chain16";
      hw.graph = ring.graph;
      hw.cal = ring.cal;
      const auto drop = std::make_pair<Qubit, Qubit>(1, 4);
      std::erase(hw.graph.edges, drop);
      std::erase_if(hw.cal.r_2q, [&](const auto& entry) { return entry.first == drop; });
      break;
    }
    case BuiltinTopology::Grid66:
      hw.name = "grid66";
      hw.graph = grid_graph(6, 11);
      hw.cal = seeded_calibration(hw.graph, 0x9a6606);
      break;
  }
  validate_hardware(hw);
  return hw;
}

HardwareModel builtin_topology(const std::string& name) {
  return builtin_topology(builtin_topology_from_name(name));
}

HardwareModel scale_noise(const HardwareModel& hw, double level) {
  if (level <= 0) throw Error("noise level must be positive");
  HardwareModel out = hw;
  bool clamped = false;
  auto scale = [&](double r) {
    double e = (1.0 - r) * level;
    if (e > kErrorCap) {
      e = kErrorCap;
      clamped = true;
    }
    return 1.0 - e;
  };
  for (auto& r : out.cal.r_1q) r = scale(r);
  for (auto& r : out.cal.r_ro) r = scale(r);
  for (auto& [e, r] : out.cal.r_2q) r = scale(r);
  if (clamped)
    std::cerr << "warning: noise level " << level << " clamped some error rates to " << kErrorCap
              << "\n";
  return out;
}

namespace {

std::vector<std::vector<double>> shortest_paths(Qubit n,
                                                const std::vector<std::vector<Qubit>>& adj,
                                                const std::function<double(Qubit, Qubit)>& weight) {
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, kInf));
  using Item = std::pair<double, Qubit>;
  for (Qubit src = 0; src < n; ++src) {
    auto& d = dist[src];
    d[src] = 0.0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0.0, src});
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (du > d[u]) continue;
      for (Qubit v : adj[u]) {
        const double cand = du + weight(u, v);
        if (cand < d[v]) {
          d[v] = cand;
          heap.push({cand, v});
        }
      }
    }
  }
  // opposite-direction sums can differ in the last ulp; keep the matrix
  // exactly symmetric
  for (Qubit a = 0; a < n; ++a)
    for (Qubit b = a + 1; b < n; ++b) dist[a][b] = dist[b][a] = std::min(dist[a][b], dist[b][a]);
  return dist;
}

}  // namespace

std::vector<std::vector<double>> distance_matrix(const HardwareModel& hw, bool noise_aware) {
  const auto adj = hw.graph.adjacency();
  if (noise_aware) {
    return shortest_paths(hw.num_qubits(), adj, [&](Qubit a, Qubit b) {
      return 1.0 + kNoiseDistanceWeight * (1.0 - hw.cal.edge_reliability(a, b));
    });
  }
  return shortest_paths(hw.num_qubits(), adj, [](Qubit, Qubit) { return 1.0; });
}

std::vector<std::vector<double>> subset_distance_matrix(const HardwareModel& hw,
                                                        const std::vector<Qubit>& subset,
                                                        bool noise_aware) {
  const Qubit n = static_cast<Qubit>(subset.size());
  std::vector<Qubit> local(hw.num_qubits(), n);  // n marks "not in subset"
  for (Qubit i = 0; i < n; ++i) local[subset[i]] = i;
  std::vector<std::vector<Qubit>> adj(n);
  for (const auto& [a, b] : hw.graph.edges) {
    if (local[a] < n && local[b] < n) {
      adj[local[a]].push_back(local[b]);
      adj[local[b]].push_back(local[a]);
    }
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  auto weight = [&](Qubit a, Qubit b) {
    if (!noise_aware) return 1.0;
    return 1.0 + kNoiseDistanceWeight * (1.0 - hw.cal.edge_reliability(subset[a], subset[b]));
  };
  return shortest_paths(n, adj, weight);
}

namespace {

std::string edge_key(Qubit a, Qubit b) {
  if (a > b) std::swap(a, b);
  return std::to_string(a) + "-" + std::to_string(b);
}

}  // namespace

HardwareModel parse_hardware_json(const std::string& text, const std::string& name) {
  nlohmann::json j = nlohmann::json::parse(text);
  HardwareModel hw;
  hw.name = name;
  hw.graph.num_qubits = j.at("num_qubits").get<Qubit>();
  for (const auto& e : j.at("edges"))
    hw.graph.add_edge(e.at(0).get<Qubit>(), e.at(1).get<Qubit>());
  hw.cal.r_1q = j.at("r_1q").get<std::vector<double>>();
  hw.cal.r_ro = j.at("r_ro").get<std::vector<double>>();
  hw.cal.t1_us = j.at("t1_us").get<std::vector<double>>();
  hw.cal.t2_us = j.at("t2_us").get<std::vector<double>>();
  for (const auto& [a, b] : hw.graph.edges) {
    const auto key = edge_key(a, b);
    if (!j.at("r_2q").contains(key)) throw Error("calibration missing r_2q entry " + key);
    hw.cal.r_2q.emplace_back(std::make_pair(a, b), j["r_2q"][key].get<double>());
  }
  const auto& jd = j.at("durations_ns");
  hw.cal.durations.ns_1q = jd.at("1q").get<double>();
  hw.cal.durations.ns_2q = jd.at("2q").get<double>();
  hw.cal.durations.ns_measure = jd.at("measure").get<double>();
  validate_hardware(hw);
  return hw;
}

std::string serialize_hardware_json(const HardwareModel& hw) {
  nlohmann::json j;
  j["num_qubits"] = hw.graph.num_qubits;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : hw.graph.edges) j["edges"].push_back({a, b});
  j["r_1q"] = hw.cal.r_1q;
  j["r_2q"] = nlohmann::json::object();
  for (const auto& [e, r] : hw.cal.r_2q) j["r_2q"][edge_key(e.first, e.second)] = r;
  j["r_ro"] = hw.cal.r_ro;
  j["t1_us"] = hw.cal.t1_us;
  j["t2_us"] = hw.cal.t2_us;
  j["durations_ns"] = {{"1q", hw.cal.durations.ns_1q},
                       {"2q", hw.cal.durations.ns_2q},
                       {"measure", hw.cal.durations.ns_measure}};
  return j.dump(2);
}

HardwareModel load_hardware_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open calibration file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  if (const auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
    stem = stem.substr(slash + 1);
  if (const auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_hardware_json(buf.str(), stem);
}

void save_hardware_json(const HardwareModel& hw, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write calibration file: " + path);
  out << serialize_hardware_json(hw) << "\n";
}

HardwareModel resolve_hardware(const std::string& name_or_path) {
  if (name_or_path == "ring16" || name_or_path == "chain16" || name_or_path == "grid66")
    return builtin_topology(name_or_path);
  return load_hardware_json(name_or_path);
}

}  // namespace naqjs
