#pragma once

#include <optional>
#include <vector>

#include "naqjs/circuit.hpp"
#include "naqjs/fidelity.hpp"
#include "naqjs/hardware.hpp"

namespace naqjs {

/// A connected region of currently-unallocated physical qubits proposed for
/// one circuit. `qubits` is in growth order, starting at `starting_point`.
struct Partition {
  std::vector<Qubit> qubits;
  double score = 0.0;
  Qubit starting_point = 0;
};

/// Availability view of the device during one scheduling round.
struct RemainingGraph {
  explicit RemainingGraph(const HardwareModel& hw)
      : available(hw.num_qubits(), true), adjacency(hw.graph.adjacency()) {}

  std::vector<bool> available;
  std::vector<std::vector<Qubit>> adjacency;

  std::size_t available_count() const;
  int degree(Qubit q) const;  // neighbors still available
  void allocate(const std::vector<Qubit>& qubits);
};

/// Candidate growth seeds: available qubits whose remaining-graph degree
/// exceeds the circuit's largest interaction-graph degree, or the qubits of
/// maximal degree when none qualify.
std::vector<Qubit> starting_points(const RemainingGraph& remaining, const Circuit& circuit);

/// Greedy region growth from `start`: repeatedly adds the frontier qubit
/// with the highest fidelity degree (ties to the lowest index) until the
/// region reaches `width` qubits. Empty result when the frontier dries up.
std::optional<Partition> grow_partition(Qubit start, Qubit width, const RemainingGraph& remaining,
                                        const HardwareModel& hw);

/// Grows a candidate from every starting point and returns the one with the
/// best fidelity score; a tie picks the lexicographically smallest sorted
/// qubit set. Empty result means the job cannot be placed this round.
std::optional<Partition> best_partition(const Circuit& circuit, const RemainingGraph& remaining,
                                        const HardwareModel& hw);

}  // namespace naqjs
