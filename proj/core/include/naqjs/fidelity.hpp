#pragma once

#include <optional>
#include <vector>

#include "naqjs/circuit.hpp"
#include "naqjs/hardware.hpp"

namespace naqjs {

/// Logical-to-physical qubit assignment; entry l is the physical qubit
/// hosting logical qubit l.
using Mapping = std::vector<Qubit>;

/// Estimated probability of a successful trial, split into its factors.
/// epst_star is the product of the four factors (within 1e-12 relative).
struct FidelityReport {
  double epst_star = 1.0;
  double gate_factor = 1.0;      // one- and two-qubit gate reliabilities
  double readout_factor = 1.0;   // measurement reliabilities
  double amp_damping_factor = 1.0;
  double phase_damping_factor = 1.0;
  double t_c_ns = 0.0;           // circuit time the damping factors used
};

/// Reliability-product score of a routed circuit on physical qubits.
/// `occupied` is the set of physical qubits the circuit owns (the image of
/// its mapping); decoherence factors and the measure-all fallback range
/// over it. Composite SWAP/BRIDGE gates are costed via their CX expansion.
/// When `t_c_override_ns` is set it replaces the computed circuit time
/// (used for ALAP-aligned rounds where measurement happens at round end).
FidelityReport epst_star(const Circuit& routed, const std::vector<Qubit>& occupied,
                         const HardwareModel& hw,
                         std::optional<double> t_c_override_ns = std::nullopt);

/// Average-reliability variant: device-mean reliabilities raised to the
/// operation counts, no decoherence terms. Kept for ablation comparisons.
double epst_plain(const Circuit& routed, const std::vector<Qubit>& occupied,
                  const HardwareModel& hw);

/// Partition fidelity score: -N_2q*(1 - mean r_2q) - N_ro*(1 - mean r_ro),
/// with means taken over the partition's internal edges and qubits and the
/// counts taken from the (logical) circuit. A partition with no internal
/// edge while the circuit has two-qubit gates scores -infinity.
double fidelity_score(const std::vector<Qubit>& partition, const Circuit& circuit,
                      const HardwareModel& hw);

/// Fidelity degree of a physical qubit: 2 * sum of r_2q over its neighbors
/// in the remaining graph plus its readout reliability. `available` masks
/// which physical qubits are still unallocated.
double fidelity_degree(Qubit q, const std::vector<bool>& available, const HardwareModel& hw,
                       const std::vector<std::vector<Qubit>>& adjacency);

}  // namespace naqjs
