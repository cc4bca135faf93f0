#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "naqjs/circuit.hpp"
#include "naqjs/fidelity.hpp"
#include "naqjs/hardware.hpp"
#include "naqjs/partition.hpp"

namespace naqjs {

/// Knobs of the heuristic router. Defaults follow the conventional values
/// of the SABRE family.
struct RouterConfig {
  std::size_t extended_size = 20;   // lookahead window beyond the front layer
  double extended_weight = 0.5;     // weight of the lookahead term
  double decay_step = 0.001;        // per-use decay added to a qubit
  int decay_reset_interval = 5;     // insertions between decay resets
};

/// A circuit legalized for the device: every two-qubit gate (after composite
/// expansion) acts on a coupling edge. Gates are over physical qubit ids.
struct RoutedCircuit {
  Circuit circuit;          // width = device qubit count
  Mapping initial_mapping;  // logical -> physical at circuit start
  Mapping final_mapping;    // logical -> physical after inserted SWAPs
  int swap_count = 0;
  int bridge_count = 0;
};

/// Routes `circuit` onto the partition starting from `initial`. Keeps a
/// SABRE front layer; unroutable two-qubit gates are resolved by the
/// cheapest SWAP or BRIDGE under a noise-aware distance cost that includes
/// the inserted gate's own error. BRIDGE applies to CX gates at hop
/// distance exactly 2 and never changes the mapping.
RoutedCircuit route(const Circuit& circuit, const Partition& partition, const Mapping& initial,
                    const HardwareModel& hw, const RouterConfig& cfg = {});

struct InitialMappingResult {
  Mapping mapping;
  RoutedCircuit routed;             // circuit routed under `mapping`
  double score = 0.0;               // EPST* of `routed`
  std::vector<double> candidate_scores;  // one per refinement round
};

/// Noise-aware initial mapping: seeds with a random permutation of the
/// partition, then for `repeats` rounds refines it by a forward route
/// followed by a route of the reversed circuit (whose final mapping becomes
/// the next seed), scoring each refined candidate by EPST* and keeping the
/// best.
InitialMappingResult initial_mapping(const Circuit& circuit, const Partition& partition,
                                     const HardwareModel& hw, int repeats, std::mt19937& rng,
                                     const RouterConfig& cfg = {});

/// True when every 2q gate of the routed circuit (after composite
/// expansion) lies on a coupling edge.
bool is_hardware_legal(const RoutedCircuit& routed, const HardwareModel& hw);

}  // namespace naqjs
