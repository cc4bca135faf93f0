#pragma once

#include <complex>
#include <vector>

#include "naqjs/circuit.hpp"
#include "naqjs/hardware.hpp"
#include "naqjs/mapper.hpp"

namespace naqjs {

/// Noiseless statevector over 2^n amplitudes. Qubit 0 is the least
/// significant bit of the amplitude index.
struct StateVector {
  std::vector<std::complex<double>> amplitudes;

  double norm() const;
  /// |<a|b>| for unit vectors; 1 means equal up to global phase.
  static double overlap(const StateVector& a, const StateVector& b);
};

/// Applies each gate's unitary in order starting from |0...0>. Measurements
/// and barriers are skipped (the pre-measurement state is produced);
/// composite gates are expanded. Limited to n <= 12.
StateVector simulate_state(const Circuit& c);

/// Checks that the routed circuit acts like the original followed by the
/// qubit permutation its SWAPs accumulated: statevector equality up to
/// global phase within `tol` on the partition-local qubits.
bool equivalent_under_permutation(const Circuit& original, const RoutedCircuit& routed,
                                  double tol = 1e-6);

/// Legality plus statevector equivalence in one verdict (used by the
/// verify CLI); width above the simulation limit degrades to legality-only.
struct RoutingCheck {
  bool legal = false;
  bool equivalent = false;   // meaningful only when checked_equivalence
  bool checked_equivalence = false;
  bool ok() const { return legal && (!checked_equivalence || equivalent); }
};
RoutingCheck check_routed(const Circuit& original, const RoutedCircuit& routed,
                          const HardwareModel& hw, double tol = 1e-6);

struct BruteForceMapping {
  Mapping mapping;
  double score = 0.0;
};

/// Exhausts every permutation of the partition (size <= 6), routes each and
/// returns the EPST*-best mapping; ties pick the lexicographically smallest
/// mapping vector.
BruteForceMapping brute_force_mapping_argmax(const Circuit& circuit, const Partition& partition,
                                             const HardwareModel& hw,
                                             const RouterConfig& cfg = {});

}  // namespace naqjs
