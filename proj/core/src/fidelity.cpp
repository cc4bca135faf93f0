#include "naqjs/fidelity.hpp"

#include <cmath>
#include <limits>

namespace naqjs {

namespace {

// Per-CX edge factors of a gate; SWAP = 3 CX on one edge, BRIDGE = 2 CX on
// each of its two edges.
double two_qubit_factor(const GateOp& g, const HardwareModel& hw) {
  switch (g.kind) {
    case GateKind::CX:
    case GateKind::CZ:
      return hw.cal.edge_reliability(g.qubits[0], g.qubits[1]);
    case GateKind::Swap: {
      const double r = hw.cal.edge_reliability(g.qubits[0], g.qubits[1]);
      return r * r * r;
    }
    case GateKind::Bridge: {
      const double r1 = hw.cal.edge_reliability(g.qubits[0], g.qubits[1]);
      const double r2 = hw.cal.edge_reliability(g.qubits[1], g.qubits[2]);
      return r1 * r1 * r2 * r2;
    }
    default:
      return 1.0;
  }
}

}  // namespace

FidelityReport epst_star(const Circuit& routed, const std::vector<Qubit>& occupied,
                         const HardwareModel& hw, std::optional<double> t_c_override_ns) {
  FidelityReport rep;
  for (const auto& g : routed.gates) {
    if (is_one_qubit_gate(g.kind)) {
      rep.gate_factor *= hw.cal.r_1q[g.qubits[0]];
    } else if (is_two_qubit_gate(g.kind) || g.kind == GateKind::Swap || g.kind == GateKind::Bridge) {
      rep.gate_factor *= two_qubit_factor(g, hw);
    } else if (g.kind == GateKind::Measure) {
      rep.readout_factor *= hw.cal.r_ro[g.qubits[0]];
    }
  }
  if (!routed.has_measure()) {
    // measure-all convention: an unmeasured circuit reads out every qubit
    for (Qubit q : occupied) rep.readout_factor *= hw.cal.r_ro[q];
  }

  rep.t_c_ns = t_c_override_ns ? *t_c_override_ns : circuit_time(routed, hw.cal.durations);
  const double t_c_us = rep.t_c_ns * 1e-3;
  for (Qubit q : occupied) {
    const double t1 = hw.cal.t1_us[q];
    const double t2 = hw.cal.t2_us[q];
    const double denom = 2.0 * t1 - t2;
    if (denom <= 0.0)
      throw Error("2*T1 <= T2 on qubit " + std::to_string(q) + "; pure dephasing time undefined");
    const double t_phi = t1 * t2 / denom;
    rep.amp_damping_factor *= std::exp(-t_c_us / t1);
    rep.phase_damping_factor *= std::exp(-t_c_us / t_phi);
  }

  rep.epst_star =
      rep.gate_factor * rep.readout_factor * rep.amp_damping_factor * rep.phase_damping_factor;
  return rep;
}

double epst_plain(const Circuit& routed, const std::vector<Qubit>& occupied,
                  const HardwareModel& hw) {
  const double r1 = hw.avg_r1q();
  const double r2 = hw.avg_r2q();
  const double ro = hw.avg_ro();
  const std::size_t n_ro = routed.has_measure() ? routed.count_measure() : occupied.size();
  return std::pow(r1, static_cast<double>(routed.count_1q())) *
         std::pow(r2, static_cast<double>(routed.count_2q())) *
         std::pow(ro, static_cast<double>(n_ro));
}

double fidelity_score(const std::vector<Qubit>& partition, const Circuit& circuit,
                      const HardwareModel& hw) {
  const std::size_t n_2q = circuit.count_2q();
  const std::size_t n_ro = circuit.has_measure() ? circuit.count_measure() : circuit.n;

  double ro_sum = 0.0;
  for (Qubit q : partition) ro_sum += hw.cal.r_ro[q];
  const double ro_mean = partition.empty() ? 1.0 : ro_sum / static_cast<double>(partition.size());

  double edge_sum = 0.0;
  std::size_t edge_count = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (std::size_t j = i + 1; j < partition.size(); ++j) {
      if (hw.graph.has_edge(partition[i], partition[j])) {
        edge_sum += hw.cal.edge_reliability(partition[i], partition[j]);
        ++edge_count;
      }
    }
  }
  if (n_2q > 0 && edge_count == 0) return -std::numeric_limits<double>::infinity();
  const double r2_mean = edge_count == 0 ? 1.0 : edge_sum / static_cast<double>(edge_count);

  return -static_cast<double>(n_2q) * (1.0 - r2_mean) - static_cast<double>(n_ro) * (1.0 - ro_mean);
}

double fidelity_degree(Qubit q, const std::vector<bool>& available, const HardwareModel& hw,
                       const std::vector<std::vector<Qubit>>& adjacency) {
  double sum = 0.0;
  for (Qubit nb : adjacency[q]) {
    if (available[nb]) sum += hw.cal.edge_reliability(q, nb);
  }
  return 2.0 * sum + hw.cal.r_ro[q];
}

}  // namespace naqjs
