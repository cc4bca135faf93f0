#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "naqjs/mapper.hpp"
#include "naqjs/statevector.hpp"

using namespace naqjs;

namespace {

HardwareModel uniform_path(Qubit n, double r2q = 0.97) {
  HardwareModel hw;
  hw.name = "upath";
  hw.graph.num_qubits = n;
  for (Qubit q = 0; q < n; ++q) {
    hw.cal.r_1q.push_back(0.999);
    hw.cal.r_ro.push_back(0.93);
    hw.cal.t1_us.push_back(30.0);
    hw.cal.t2_us.push_back(20.0);
  }
  for (Qubit q = 0; q + 1 < n; ++q) {
    hw.graph.add_edge(q, q + 1);
    hw.cal.r_2q.emplace_back(std::make_pair(q, static_cast<Qubit>(q + 1)), r2q);
  }
  return hw;
}

Partition whole_device(const HardwareModel& hw) {
  Partition p;
  for (Qubit q = 0; q < hw.num_qubits(); ++q) p.qubits.push_back(q);
  return p;
}

Mapping identity_mapping(Qubit n) {
  Mapping m(n);
  for (Qubit q = 0; q < n; ++q) m[q] = q;
  return m;
}

}  // namespace

TEST_CASE("route: distant CNOT with follow-up work takes one SWAP") {
  const HardwareModel hw = uniform_path(3);
  Circuit c;
  c.n = 3;
  c.gates = {GateOp::cx(0, 2), GateOp::cx(0, 2), GateOp::cx(0, 2)};
  const RoutedCircuit routed = route(c, whole_device(hw), identity_mapping(3), hw);

  CHECK(routed.swap_count == 1);
  CHECK(routed.bridge_count == 0);
  CHECK(is_hardware_legal(routed, hw));
  CHECK(routed.final_mapping != routed.initial_mapping);
  // the swap lands on (Q0,Q1), after which the gate runs on (Q1,Q2)
  REQUIRE(routed.circuit.gates.size() == 4);
  CHECK(routed.circuit.gates[0] == GateOp::swap(0, 1));
  CHECK(routed.circuit.gates[1] == GateOp::cx(1, 2));
  CHECK(equivalent_under_permutation(c, routed));
}

TEST_CASE("route: lone distant CNOT takes one BRIDGE, mapping unchanged") {
  const HardwareModel hw = uniform_path(3);
  Circuit c;
  c.n = 3;
  c.gates = {GateOp::cx(0, 2)};
  const RoutedCircuit routed = route(c, whole_device(hw), identity_mapping(3), hw);

  CHECK(routed.swap_count == 0);
  CHECK(routed.bridge_count == 1);
  REQUIRE(routed.circuit.gates.size() == 1);
  CHECK(routed.circuit.gates[0] == GateOp::bridge(0, 1, 2));
  CHECK(routed.final_mapping == routed.initial_mapping);
  CHECK(is_hardware_legal(routed, hw));
  CHECK(equivalent_under_permutation(c, routed));
}

TEST_CASE("route: adjacent circuit passes through untouched") {
  const HardwareModel hw = uniform_path(4);
  Circuit c;
  c.n = 4;
  c.gates = {GateOp::x(0), GateOp::cx(0, 1), GateOp::cx(2, 3), GateOp::measure(1)};
  const RoutedCircuit routed = route(c, whole_device(hw), identity_mapping(4), hw);
  CHECK(routed.swap_count == 0);
  CHECK(routed.bridge_count == 0);
  CHECK(routed.circuit.gates.size() == c.gates.size());
  CHECK(routed.final_mapping == routed.initial_mapping);
}

TEST_CASE("route: CZ at distance 2 cannot bridge, swaps instead") {
  const HardwareModel hw = uniform_path(3);
  Circuit c;
  c.n = 3;
  c.gates = {GateOp::cz(0, 2)};
  const RoutedCircuit routed = route(c, whole_device(hw), identity_mapping(3), hw);
  CHECK(routed.bridge_count == 0);
  CHECK(routed.swap_count == 1);
  CHECK(is_hardware_legal(routed, hw));
  CHECK(equivalent_under_permutation(c, routed));
}

TEST_CASE("route: legality fuzz over random devices and partitions") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const HardwareModel hw = testing::random_hardware(rng, 6 + trial % 10);
    std::uniform_int_distribution<Qubit> width_dist(2, std::min<Qubit>(hw.num_qubits(), 7));
    const Qubit width = width_dist(rng);
    const Partition part = testing::random_connected_partition(rng, hw, width);
    const Circuit c = testing::random_circuit(rng, width, 4 + trial % 40);
    const Mapping initial = testing::random_mapping(rng, part);
    const RoutedCircuit routed = route(c, part, initial, hw);
    REQUIRE(is_hardware_legal(routed, hw));
    // routing never drops or invents non-swap gates
    std::size_t original_gates = c.gates.size();
    std::size_t kept = 0;
    for (const auto& g : routed.circuit.gates)
      if (g.kind != GateKind::Swap || std::count(c.gates.begin(), c.gates.end(), g)) ++kept;
    CHECK(kept >= original_gates);
  }
}

TEST_CASE("route: semantics fuzz against the statevector oracle") {
  std::mt19937 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const HardwareModel hw = testing::random_hardware(rng, 8);
    std::uniform_int_distribution<Qubit> width_dist(2, 6);
    const Qubit width = width_dist(rng);
    const Partition part = testing::random_connected_partition(rng, hw, width);
    const Circuit c = testing::random_circuit(rng, width, 5 + trial % 30);
    const Mapping initial = testing::random_mapping(rng, part);
    const RoutedCircuit routed = route(c, part, initial, hw);
    CHECK(equivalent_under_permutation(c, routed, 1e-6));
  }
}

TEST_CASE("initial_mapping: width-1 circuit has the only possible mapping") {
  const HardwareModel hw = uniform_path(3);
  Partition p;
  p.qubits = {1};
  Circuit c;
  c.n = 1;
  c.gates = {GateOp::x(0), GateOp::measure(0)};
  std::mt19937 rng(1);
  const auto res = initial_mapping(c, p, hw, 3, rng);
  CHECK(res.mapping == Mapping{1});
  CHECK(res.candidate_scores.size() == 3);
}

TEST_CASE("initial_mapping: deterministic under a fixed seed") {
  const HardwareModel hw = builtin_topology("ring16");
  std::mt19937 gen(7);
  const Circuit c = testing::random_circuit(gen, 5, 30);
  RemainingGraph remaining(hw);
  const auto part = best_partition(c, remaining, hw);
  REQUIRE(part);

  std::mt19937 rng_a(123), rng_b(123);
  const auto a = initial_mapping(c, *part, hw, 1, rng_a);
  const auto b = initial_mapping(c, *part, hw, 1, rng_b);
  CHECK(a.mapping == b.mapping);
  CHECK(a.score == b.score);
  CHECK(a.routed.circuit == b.routed.circuit);
}

TEST_CASE("initial_mapping: argmax over its refinement candidates") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    const HardwareModel hw = testing::random_hardware(rng, 8);
    const Qubit width = 3 + trial % 3;
    const Partition part = testing::random_connected_partition(rng, hw, width);
    const Circuit c = testing::random_circuit(rng, width, 10 + trial % 20);
    const auto res = initial_mapping(c, part, hw, 4, rng);
    REQUIRE(res.candidate_scores.size() == 4);
    for (double s : res.candidate_scores) CHECK(res.score >= s);
    CHECK(res.score >= res.candidate_scores.front());
    CHECK(res.score == *std::max_element(res.candidate_scores.begin(),
                                         res.candidate_scores.end()));
  }
}

TEST_CASE("initial_mapping: avoids the worst edge for a CX-heavy pair") {
  // 4-qubit path with one terrible edge; the hot pair must not sit on it
  HardwareModel hw = uniform_path(4, 0.99);
  hw.cal.r_2q[0].second = 0.75;  // edge (0,1) is bad
  Circuit c;
  c.n = 4;
  for (int i = 0; i < 8; ++i) c.gates.push_back(GateOp::cx(0, 1));  // hot logical pair
  c.gates.push_back(GateOp::cx(1, 2));
  c.gates.push_back(GateOp::cx(2, 3));
  for (Qubit q = 0; q < 4; ++q) c.gates.push_back(GateOp::measure(q));

  Partition part = whole_device(hw);
  std::mt19937 rng(9);
  const auto res = initial_mapping(c, part, hw, 6, rng);
  // the hot pair (logical 0,1) must not occupy physical {0,1}
  std::vector<Qubit> hot = {res.mapping[0], res.mapping[1]};
  std::sort(hot.begin(), hot.end());
  CHECK(hot != std::vector<Qubit>{0, 1});

  // and the exhaustive oracle confirms no mapping beats it by a wide margin
  const auto brute = brute_force_mapping_argmax(c, part, hw);
  CHECK(res.score >= 0.5 * brute.score);
}

TEST_CASE("brute_force_mapping_argmax: oracle dominates the heuristic") {
  std::mt19937 rng(54);
  int at_least_as_good = 0;
  const int trials = 20;
  for (int trial = 0; trial < trials; ++trial) {
    const HardwareModel hw = testing::random_hardware(rng, 7);
    const Qubit width = 3 + trial % 2;
    const Partition part = testing::random_connected_partition(rng, hw, width);
    const Circuit c = testing::random_circuit(rng, width, 8 + trial % 12);
    const auto brute = brute_force_mapping_argmax(c, part, hw);
    const auto heur = initial_mapping(c, part, hw, 3, rng);
    CHECK(brute.score >= heur.score - 1e-12);
    if (heur.score >= brute.score - 1e-12) ++at_least_as_good;
  }
  CHECK(at_least_as_good >= trials / 4);  // the heuristic often finds the optimum
}
