#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "naqjs/circuit.hpp"
#include "naqjs/dag.hpp"

namespace naqjs {

/// Undirected coupling graph of a device.
struct CouplingGraph {
  Qubit num_qubits = 0;
  std::vector<std::pair<Qubit, Qubit>> edges;  // stored with first < second

  void add_edge(Qubit a, Qubit b);
  bool has_edge(Qubit a, Qubit b) const;
  std::vector<std::vector<Qubit>> adjacency() const;
  bool is_connected() const;
};

/// Per-qubit and per-edge calibration data. Reliabilities are success
/// probabilities in (0, 1]; times are microseconds with T2 <= 2*T1.
struct Calibration {
  std::vector<double> r_1q;
  std::vector<double> r_ro;
  std::vector<double> t1_us;
  std::vector<double> t2_us;
  std::vector<std::pair<std::pair<Qubit, Qubit>, double>> r_2q;  // keyed by (min,max)
  GateDurations durations;

  double edge_reliability(Qubit a, Qubit b) const;
  bool operator==(const Calibration&) const = default;
};

struct HardwareModel {
  std::string name;
  CouplingGraph graph;
  Calibration cal;

  Qubit num_qubits() const { return graph.num_qubits; }
  double avg_r1q() const;
  double avg_r2q() const;
  double avg_ro() const;
};

/// Throws Error on malformed models (missing edge reliabilities, reliability
/// out of (0,1], T2 > 2*T1, ...). A disconnected graph only produces a
/// warning line on stderr.
void validate_hardware(const HardwareModel& hw);

enum class BuiltinTopology { Ring16, Chain16, Grid66 };

BuiltinTopology builtin_topology_from_name(const std::string& name);

/// Built-in devices: ring16 is the 16-qubit Guadalupe layout, chain16 is
/// ring16 with the Q1-Q4 edge removed (same calibration on the surviving
/// edges), grid66 is a 6x11 grid stand-in for a 66-qubit processor.
/// Calibration is seeded deterministically: published device averages with
/// +/-20% relative jitter applied per element to the error rates and to
/// T1/T2.
HardwareModel builtin_topology(BuiltinTopology which);
HardwareModel builtin_topology(const std::string& name);

/// Multiplies every error rate (1 - r) by `level`, capped so reliabilities
/// stay positive; T1/T2 are unchanged. Clamped entries produce a warning.
HardwareModel scale_noise(const HardwareModel& hw, double level);

/// Weight applied to two-qubit error rates when building noise-aware
/// distances: w(i,j) = 1 + kNoiseDistanceWeight * (1 - r_2q(i,j)).
inline constexpr double kNoiseDistanceWeight = 10.0;

/// All-pairs shortest-path distances; plain hop counts or noise-aware
/// weighted distances. Disconnected pairs get +infinity.
std::vector<std::vector<double>> distance_matrix(const HardwareModel& hw, bool noise_aware);

/// Same, restricted to the subgraph induced by `subset`; the result is
/// indexed by position in `subset`.
std::vector<std::vector<double>> subset_distance_matrix(const HardwareModel& hw,
                                                        const std::vector<Qubit>& subset,
                                                        bool noise_aware);

/// Calibration JSON file I/O. The model name is taken from the file stem.
HardwareModel load_hardware_json(const std::string& path);
HardwareModel parse_hardware_json(const std::string& text, const std::string& name);
std::string serialize_hardware_json(const HardwareModel& hw);
void save_hardware_json(const HardwareModel& hw, const std::string& path);

/// Resolves a CLI-style spec: a builtin name or a path to calibration JSON.
HardwareModel resolve_hardware(const std::string& name_or_path);

}  // namespace naqjs
