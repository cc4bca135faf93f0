#pragma once

#include <cstddef>
#include <vector>

#include "naqjs/circuit.hpp"

namespace naqjs {

/// Dependency DAG over the gates of a circuit. Node i refers to gate i of
/// the source circuit. Gate u precedes v iff they share a qubit and u is the
/// closest earlier gate on that qubit. Barriers depend on every earlier gate
/// and release every later one, regardless of their operand list.
struct CircuitDag {
  std::size_t num_gates = 0;
  std::vector<std::vector<std::size_t>> successors;
  std::vector<int> in_degree;

  bool is_acyclic() const;
  /// Kahn order (FIFO over ready nodes); a valid topological order.
  std::vector<std::size_t> topological_order() const;
};

CircuitDag build_dag(const Circuit& c);

/// Duration of each gate class in nanoseconds. Composite gates are timed by
/// their CX expansion; barriers take zero time.
struct GateDurations {
  double ns_1q = 50.0;
  double ns_2q = 300.0;
  double ns_measure = 1000.0;

  bool operator==(const GateDurations&) const = default;
};

/// Circuit makespan in nanoseconds: per-qubit clocks advanced in topological
/// order, one-qubit gates advance their clock, two-qubit gates synchronize
/// both clocks to the max before advancing, barriers synchronize all clocks.
/// SWAP/BRIDGE gates are expanded to CX sequences before timing.
double circuit_time(const Circuit& c, const GateDurations& durations);

}  // namespace naqjs
