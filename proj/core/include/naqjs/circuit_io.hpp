#pragma once

#include <string>

#include "naqjs/circuit.hpp"

namespace naqjs {

enum class CircuitFormat { Qasm2Subset, Json };

/// Parse error with 1-based source position.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, int column)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Parses a circuit from text. The QASM subset accepts `OPENQASM 2.0;`, an
/// optional include line, one qreg, one creg, the supported gate set plus
/// the nonstandard `bridge` extension, `barrier`, and `measure`. The JSON
/// form is {"n": int, "gates": [{"kind": str, "qubits": [int...],
/// "theta": float?}]}.
Circuit parse_circuit(const std::string& source, CircuitFormat format);

/// Inverse of parse_circuit; parse(serialize(c)) == c in either format.
/// Classical bit targets of measurements are not retained by the IR, so
/// QASM serialization measures q[i] into c[i].
std::string serialize_circuit(const Circuit& c, CircuitFormat format);

/// Reads a circuit file, choosing the format from the extension
/// (.qasm -> QASM subset, anything else -> JSON).
Circuit load_circuit_file(const std::string& path);

}  // namespace naqjs
