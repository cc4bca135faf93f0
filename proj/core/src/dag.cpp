#include "naqjs/dag.hpp"

#include <algorithm>
#include <deque>

namespace naqjs {

bool CircuitDag::is_acyclic() const {
  return topological_order().size() == num_gates;
}

std::vector<std::size_t> CircuitDag::topological_order() const {
  std::vector<int> deg = in_degree;
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < num_gates; ++i)
    if (deg[i] == 0) ready.push_back(i);
  std::vector<std::size_t> order;
  order.reserve(num_gates);
  while (!ready.empty()) {
    const std::size_t g = ready.front();
    ready.pop_front();
    order.push_back(g);
    for (std::size_t s : successors[g]) {
      if (--deg[s] == 0) ready.push_back(s);
    }
  }
  return order;
}

CircuitDag build_dag(const Circuit& c) {
  CircuitDag dag;
  dag.num_gates = c.gates.size();
  dag.successors.assign(dag.num_gates, {});
  dag.in_degree.assign(dag.num_gates, 0);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // last gate seen on each qubit wire; a barrier occupies every wire
  std::vector<std::size_t> last(c.n, kNone);

  auto link = [&](std::size_t from, std::size_t to) {
    auto& succ = dag.successors[from];
    if (std::find(succ.begin(), succ.end(), to) == succ.end()) {
      succ.push_back(to);
      ++dag.in_degree[to];
    }
  };

  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const auto& g = c.gates[i];
    if (g.kind == GateKind::Barrier) {
      for (Qubit q = 0; q < c.n; ++q) {
        if (last[q] != kNone) link(last[q], i);
        last[q] = i;
      }
    } else {
      for (Qubit q : g.qubits) {
        if (last[q] != kNone) link(last[q], i);
        last[q] = i;
      }
    }
  }
  return dag;
}

double circuit_time(const Circuit& c, const GateDurations& durations) {
  const Circuit expanded = expand_composites(c);
  const CircuitDag dag = build_dag(expanded);
  std::vector<double> clocks(expanded.n, 0.0);

  for (std::size_t gi : dag.topological_order()) {
    const auto& g = expanded.gates[gi];
    switch (g.kind) {
      case GateKind::X:
      case GateKind::SX:
      case GateKind::RZ:
        clocks[g.qubits[0]] += durations.ns_1q;
        break;
      case GateKind::Measure:
        clocks[g.qubits[0]] += durations.ns_measure;
        break;
      case GateKind::CX:
      case GateKind::CZ: {
        const Qubit a = g.qubits[0], b = g.qubits[1];
        const double t = std::max(clocks[a], clocks[b]) + durations.ns_2q;
        clocks[a] = clocks[b] = t;
        break;
      }
      case GateKind::Barrier: {
        const double t = clocks.empty() ? 0.0 : *std::max_element(clocks.begin(), clocks.end());
        std::fill(clocks.begin(), clocks.end(), t);
        break;
      }
      case GateKind::Swap:
      case GateKind::Bridge:
        break;  // unreachable, removed by expansion
    }
  }
  return clocks.empty() ? 0.0 : *std::max_element(clocks.begin(), clocks.end());
}

}  // namespace naqjs
