#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace naqjs {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
  X,
  SX,
  RZ,
  CZ,
  CX,
  Swap,
  Bridge,
  Measure,
  Barrier,
};

const char* to_string(GateKind kind);

/// Number of qubit operands a gate kind takes. Barrier is variadic and
/// returns 0 here (an empty operand list means "all qubits").
int gate_arity(GateKind kind);

bool is_one_qubit_gate(GateKind kind);
bool is_two_qubit_gate(GateKind kind);

/// One gate in the list IR. Qubit indices are logical before mapping and
/// physical afterwards; the IR itself does not distinguish the two.
struct GateOp {
  GateKind kind;
  std::vector<Qubit> qubits;
  double theta = 0.0;  // rotation angle, RZ only

  static GateOp x(Qubit q) { return {GateKind::X, {q}}; }
  static GateOp sx(Qubit q) { return {GateKind::SX, {q}}; }
  static GateOp rz(Qubit q, double theta) { return {GateKind::RZ, {q}, theta}; }
  static GateOp cx(Qubit c, Qubit t) { return {GateKind::CX, {c, t}}; }
  static GateOp cz(Qubit a, Qubit b) { return {GateKind::CZ, {a, b}}; }
  static GateOp swap(Qubit a, Qubit b) { return {GateKind::Swap, {a, b}}; }
  static GateOp bridge(Qubit c, Qubit m, Qubit t) { return {GateKind::Bridge, {c, m, t}}; }
  static GateOp measure(Qubit q) { return {GateKind::Measure, {q}}; }
  static GateOp barrier(std::vector<Qubit> qs = {}) { return {GateKind::Barrier, std::move(qs)}; }

  bool operator==(const GateOp& other) const = default;
};

/// Gate-list circuit over `n` qubits. Immutable by convention once built;
/// all transformations below return new circuits.
struct Circuit {
  Qubit n = 0;
  std::vector<GateOp> gates;

  bool operator==(const Circuit& other) const = default;

  std::size_t count_1q() const;
  std::size_t count_2q() const;   // counts SWAP as 3 and BRIDGE as 4 CX
  std::size_t count_measure() const;
  bool has_measure() const;
};

/// Throws Error if a gate has wrong arity, repeated operands, or operands
/// outside [0, n).
void validate_circuit(const Circuit& c);

/// Reverses the gate list. Measurements are stripped first and re-appended
/// after the reversed body, so the result keeps measurement-last form while
/// retaining the same two-qubit connectivity requirements.
Circuit reverse_circuit(const Circuit& c);

/// Rewrites SWAP(a,b) into [CX(a,b), CX(b,a), CX(a,b)] and BRIDGE(a,m,b)
/// into [CX(m,b), CX(a,m), CX(m,b), CX(a,m)] (net effect CX(a,b)).
Circuit expand_composites(const Circuit& c);

/// Degree of each logical qubit in the interaction graph (vertices are
/// qubits, edges are pairs that appear together in some multi-qubit gate).
std::vector<int> interaction_degrees(const Circuit& c);
int max_interaction_degree(const Circuit& c);

/// One schedulable unit: a circuit plus its shot count and submission time.
struct Job {
  std::string id;
  std::uint64_t seq = 0;  // position in the workload, used as final tie-break
  Circuit circuit;
  std::uint64_t shots = 1;
  double submit_time = 0.0;  // seconds

  Qubit width() const { return circuit.n; }
};

}  // namespace naqjs
