#include "naqjs/circuit.hpp"

#include <algorithm>
#include <set>

namespace naqjs {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::SX: return "sx";
    case GateKind::RZ: return "rz";
    case GateKind::CZ: return "cz";
    case GateKind::CX: return "cx";
    case GateKind::Swap: return "swap";
    case GateKind::Bridge: return "bridge";
    case GateKind::Measure: return "measure";
    case GateKind::Barrier: return "barrier";
  }
  return "?";
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::SX:
    case GateKind::RZ:
    case GateKind::Measure:
      return 1;
    case GateKind::CZ:
    case GateKind::CX:
    case GateKind::Swap:
      return 2;
    case GateKind::Bridge:
      return 3;
    case GateKind::Barrier:
      return 0;
  }
  return 0;
}

bool is_one_qubit_gate(GateKind kind) {
  return kind == GateKind::X || kind == GateKind::SX || kind == GateKind::RZ;
}

bool is_two_qubit_gate(GateKind kind) {
  return kind == GateKind::CX || kind == GateKind::CZ;
}

std::size_t Circuit::count_1q() const {
  std::size_t n1q = 0;
  for (const auto& g : gates)
    if (is_one_qubit_gate(g.kind)) ++n1q;
  return n1q;
}

std::size_t Circuit::count_2q() const {
  std::size_t n2q = 0;
  for (const auto& g : gates) {
    if (is_two_qubit_gate(g.kind)) ++n2q;
    else if (g.kind == GateKind::Swap) n2q += 3;
    else if (g.kind == GateKind::Bridge) n2q += 4;
  }
  return n2q;
}

std::size_t Circuit::count_measure() const {
  std::size_t m = 0;
  for (const auto& g : gates)
    if (g.kind == GateKind::Measure) ++m;
  return m;
}

bool Circuit::has_measure() const { return count_measure() > 0; }

void validate_circuit(const Circuit& c) {
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const auto& g = c.gates[i];
    const int arity = gate_arity(g.kind);
    if (g.kind != GateKind::Barrier && static_cast<int>(g.qubits.size()) != arity)
      throw Error("gate " + std::to_string(i) + " (" + to_string(g.kind) + "): expected " +
                  std::to_string(arity) + " operand(s), got " + std::to_string(g.qubits.size()));
    std::set<Qubit> seen;
    for (Qubit q : g.qubits) {
      if (q >= c.n)
        throw Error("gate " + std::to_string(i) + ": qubit " + std::to_string(q) +
                    " out of range for width " + std::to_string(c.n));
      if (!seen.insert(q).second)
        throw Error("gate " + std::to_string(i) + ": repeated qubit operand " + std::to_string(q));
    }
  }
}

Circuit reverse_circuit(const Circuit& c) {
  Circuit out;
  out.n = c.n;
  out.gates.reserve(c.gates.size());
  std::vector<GateOp> measures;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::Measure) measures.push_back(g);
  }
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    if (it->kind != GateKind::Measure) out.gates.push_back(*it);
  }
  out.gates.insert(out.gates.end(), measures.begin(), measures.end());
  return out;
}

Circuit expand_composites(const Circuit& c) {
  Circuit out;
  out.n = c.n;
  out.gates.reserve(c.gates.size());
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::Swap: {
        const Qubit a = g.qubits[0], b = g.qubits[1];
        out.gates.push_back(GateOp::cx(a, b));
        out.gates.push_back(GateOp::cx(b, a));
        out.gates.push_back(GateOp::cx(a, b));
        break;
      }
      case GateKind::Bridge: {
        const Qubit a = g.qubits[0], m = g.qubits[1], b = g.qubits[2];
        out.gates.push_back(GateOp::cx(m, b));
        out.gates.push_back(GateOp::cx(a, m));
        out.gates.push_back(GateOp::cx(m, b));
        out.gates.push_back(GateOp::cx(a, m));
        break;
      }
      default:
        out.gates.push_back(g);
    }
  }
  return out;
}

std::vector<int> interaction_degrees(const Circuit& c) {
  std::set<std::pair<Qubit, Qubit>> edges;
  auto add = [&](Qubit a, Qubit b) {
    if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
  };
  for (const auto& g : c.gates) {
    if (is_two_qubit_gate(g.kind) || g.kind == GateKind::Swap) {
      add(g.qubits[0], g.qubits[1]);
    } else if (g.kind == GateKind::Bridge) {
      add(g.qubits[0], g.qubits[1]);
      add(g.qubits[1], g.qubits[2]);
    }
  }
  std::vector<int> deg(c.n, 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

int max_interaction_degree(const Circuit& c) {
  const auto deg = interaction_degrees(c);
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

}  // namespace naqjs
