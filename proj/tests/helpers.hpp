#pragma once

// Shared generators and reference implementations for the test suites.
// The reference oracles here are deliberately written as plain linear
// scans, independent of the library's DAG-based implementations.

#include <algorithm>
#include <random>
#include <vector>

#include "naqjs/circuit.hpp"
#include "naqjs/dag.hpp"
#include "naqjs/hardware.hpp"
#include "naqjs/partition.hpp"

namespace naqjs::testing {

struct CircuitOptions {
  bool with_measure = true;
  bool with_barrier = false;
  bool with_composites = false;  // SWAP/BRIDGE in the input
  double p_two_qubit = 0.45;
};

inline Circuit random_circuit(std::mt19937& rng, Qubit n, int num_gates,
                              const CircuitOptions& opt = {}) {
  Circuit c;
  c.n = n;
  std::uniform_int_distribution<Qubit> pick(0, n - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2 * 3.141592653589793);
  for (int i = 0; i < num_gates; ++i) {
    const double r = coin(rng);
    if (opt.with_barrier && r < 0.03) {
      c.gates.push_back(GateOp::barrier());
      continue;
    }
    if (n >= 2 && r < opt.p_two_qubit) {
      Qubit a = pick(rng), b = pick(rng);
      while (b == a) b = pick(rng);
      if (opt.with_composites && coin(rng) < 0.15) {
        if (n >= 3 && coin(rng) < 0.5) {
          Qubit m = pick(rng);
          while (m == a || m == b) m = pick(rng);
          c.gates.push_back(GateOp::bridge(a, m, b));
        } else {
          c.gates.push_back(GateOp::swap(a, b));
        }
      } else if (coin(rng) < 0.25) {
        c.gates.push_back(GateOp::cz(a, b));
      } else {
        c.gates.push_back(GateOp::cx(a, b));
      }
    } else {
      const Qubit q = pick(rng);
      const double w = coin(rng);
      if (w < 0.4) c.gates.push_back(GateOp::x(q));
      else if (w < 0.7) c.gates.push_back(GateOp::sx(q));
      else c.gates.push_back(GateOp::rz(q, angle(rng)));
    }
  }
  if (opt.with_measure) {
    for (Qubit q = 0; q < n; ++q) c.gates.push_back(GateOp::measure(q));
  }
  return c;
}

// Reference for circuit_time: one pass over the gate list with per-qubit
// clocks, no DAG, no queue.
inline double linear_scan_time(const Circuit& c, const GateDurations& d) {
  const Circuit expanded = expand_composites(c);
  std::vector<double> clocks(expanded.n, 0.0);
  for (const auto& g : expanded.gates) {
    switch (g.kind) {
      case GateKind::X:
      case GateKind::SX:
      case GateKind::RZ:
        clocks[g.qubits[0]] += d.ns_1q;
        break;
      case GateKind::Measure:
        clocks[g.qubits[0]] += d.ns_measure;
        break;
      case GateKind::CX:
      case GateKind::CZ: {
        const double t = std::max(clocks[g.qubits[0]], clocks[g.qubits[1]]) + d.ns_2q;
        clocks[g.qubits[0]] = clocks[g.qubits[1]] = t;
        break;
      }
      case GateKind::Barrier: {
        double t = 0.0;
        for (double x : clocks) t = std::max(t, x);
        for (double& x : clocks) x = t;
        break;
      }
      default:
        break;
    }
  }
  double t = 0.0;
  for (double x : clocks) t = std::max(t, x);
  return t;
}

// Random connected device with jittered calibration.
inline HardwareModel random_hardware(std::mt19937& rng, Qubit n, double extra_edge_p = 0.25) {
  HardwareModel hw;
  hw.name = "random";
  hw.graph.num_qubits = n;
  std::uniform_int_distribution<Qubit> pick(0, n - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  // random spanning tree, then extra edges
  std::vector<Qubit> order(n);
  for (Qubit i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (Qubit i = 1; i < n; ++i) {
    std::uniform_int_distribution<Qubit> parent(0, i - 1);
    hw.graph.add_edge(order[i], order[parent(rng)]);
  }
  for (Qubit a = 0; a < n; ++a)
    for (Qubit b = a + 1; b < n; ++b)
      if (!hw.graph.has_edge(a, b) && coin(rng) < extra_edge_p / static_cast<double>(n))
        hw.graph.add_edge(a, b);

  std::uniform_real_distribution<double> r1(0.995, 0.9995);
  std::uniform_real_distribution<double> r2(0.93, 0.995);
  std::uniform_real_distribution<double> ro(0.88, 0.98);
  std::uniform_real_distribution<double> t1(20.0, 40.0);
  for (Qubit q = 0; q < n; ++q) {
    hw.cal.r_1q.push_back(r1(rng));
    hw.cal.r_ro.push_back(ro(rng));
    const double t1v = t1(rng);
    hw.cal.t1_us.push_back(t1v);
    hw.cal.t2_us.push_back(std::min(2.0 * t1v * 0.9, t1v * 0.6 + 10.0));
  }
  for (const auto& e : hw.graph.edges) hw.cal.r_2q.emplace_back(e, r2(rng));
  return hw;
}

// Random connected subset of `width` qubits grown by shuffled BFS.
inline Partition random_connected_partition(std::mt19937& rng, const HardwareModel& hw,
                                            Qubit width) {
  const auto adj = hw.graph.adjacency();
  std::uniform_int_distribution<Qubit> pick(0, hw.num_qubits() - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Partition part;
    std::vector<bool> in(hw.num_qubits(), false);
    const Qubit start = pick(rng);
    part.starting_point = start;
    part.qubits.push_back(start);
    in[start] = true;
    std::vector<Qubit> frontier(adj[start].begin(), adj[start].end());
    while (part.qubits.size() < width && !frontier.empty()) {
      std::uniform_int_distribution<std::size_t> fi(0, frontier.size() - 1);
      const std::size_t i = fi(rng);
      const Qubit q = frontier[i];
      frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(i));
      if (in[q]) continue;
      in[q] = true;
      part.qubits.push_back(q);
      for (Qubit nb : adj[q])
        if (!in[nb]) frontier.push_back(nb);
    }
    if (part.qubits.size() == width) return part;
  }
  throw Error("could not sample a connected partition");
}

inline Mapping random_mapping(std::mt19937& rng, const Partition& part) {
  Mapping m = part.qubits;
  std::shuffle(m.begin(), m.end(), rng);
  return m;
}

// Uniform-calibration copy of a model (noise-blindness checks).
inline HardwareModel with_uniform_calibration(HardwareModel hw, double r1, double r2, double ro) {
  for (auto& v : hw.cal.r_1q) v = r1;
  for (auto& v : hw.cal.r_ro) v = ro;
  for (auto& [e, v] : hw.cal.r_2q) v = r2;
  return hw;
}

}  // namespace naqjs::testing
