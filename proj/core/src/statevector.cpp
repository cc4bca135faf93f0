#include "naqjs/statevector.hpp"

#include <algorithm>
#include <cmath>

namespace naqjs {

namespace {

constexpr Qubit kMaxSimQubits = 12;

using Amp = std::complex<double>;

void apply_1q(std::vector<Amp>& amps, Qubit q, const Amp m[2][2]) {
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Amp a0 = amps[i];
      const Amp a1 = amps[i + stride];
      amps[i] = m[0][0] * a0 + m[0][1] * a1;
      amps[i + stride] = m[1][0] * a0 + m[1][1] * a1;
    }
  }
}

void apply_cx(std::vector<Amp>& amps, Qubit control, Qubit target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
  }
}

void apply_cz(std::vector<Amp>& amps, Qubit a, Qubit b) {
  const std::size_t abit = std::size_t{1} << a;
  const std::size_t bbit = std::size_t{1} << b;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & abit) && (i & bbit)) amps[i] = -amps[i];
  }
}

}  // namespace

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

double StateVector::overlap(const StateVector& a, const StateVector& b) {
  if (a.amplitudes.size() != b.amplitudes.size()) throw Error("statevector size mismatch");
  Amp dot{0.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    dot += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return std::abs(dot);
}

StateVector simulate_state(const Circuit& c) {
  if (c.n > kMaxSimQubits)
    throw Error("statevector limit is " + std::to_string(kMaxSimQubits) + " qubits, got " +
                std::to_string(c.n));
  const Circuit expanded = expand_composites(c);
  StateVector sv;
  sv.amplitudes.assign(std::size_t{1} << c.n, Amp{0.0, 0.0});
  sv.amplitudes[0] = Amp{1.0, 0.0};

  static const Amp x_mat[2][2] = {{0, 1}, {1, 0}};
  static const Amp sx_mat[2][2] = {{Amp(0.5, 0.5), Amp(0.5, -0.5)}, {Amp(0.5, -0.5), Amp(0.5, 0.5)}};

  for (const auto& g : expanded.gates) {
    switch (g.kind) {
      case GateKind::X:
        apply_1q(sv.amplitudes, g.qubits[0], x_mat);
        break;
      case GateKind::SX:
        apply_1q(sv.amplitudes, g.qubits[0], sx_mat);
        break;
      case GateKind::RZ: {
        const Amp rz_mat[2][2] = {{std::polar(1.0, -g.theta / 2.0), 0},
                                  {0, std::polar(1.0, g.theta / 2.0)}};
        apply_1q(sv.amplitudes, g.qubits[0], rz_mat);
        break;
      }
      case GateKind::CX:
        apply_cx(sv.amplitudes, g.qubits[0], g.qubits[1]);
        break;
      case GateKind::CZ:
        apply_cz(sv.amplitudes, g.qubits[0], g.qubits[1]);
        break;
      case GateKind::Measure:
      case GateKind::Barrier:
        break;
      case GateKind::Swap:
      case GateKind::Bridge:
        break;  // removed by expansion
    }
  }
  return sv;
}

bool equivalent_under_permutation(const Circuit& original, const RoutedCircuit& routed,
                                  double tol) {
  const Qubit n = original.n;
  if (routed.initial_mapping.size() != n || routed.final_mapping.size() != n)
    throw Error("mapping width mismatch in equivalence check");

  // compact the routed circuit onto partition-local slots
  std::vector<Qubit> slots = routed.initial_mapping;
  std::sort(slots.begin(), slots.end());
  std::vector<Qubit> slot_of(routed.circuit.n, n);
  for (Qubit i = 0; i < n; ++i) slot_of[slots[i]] = i;

  Circuit compact;
  compact.n = n;
  for (const auto& g : routed.circuit.gates) {
    GateOp local = g;
    for (auto& q : local.qubits) {
      if (slot_of[q] >= n) throw Error("routed gate touches a qubit outside the partition");
      q = slot_of[q];
    }
    compact.gates.push_back(std::move(local));
  }

  const StateVector routed_sv = simulate_state(compact);
  const StateVector original_sv = simulate_state(original);

  // logical qubit l ends up on slot slot_of[final_mapping[l]]
  std::vector<Qubit> end_slot(n);
  for (Qubit l = 0; l < n; ++l) end_slot[l] = slot_of[routed.final_mapping[l]];

  StateVector permuted;
  permuted.amplitudes.assign(routed_sv.amplitudes.size(), {0.0, 0.0});
  for (std::size_t z = 0; z < permuted.amplitudes.size(); ++z) {
    std::size_t x = 0;
    for (Qubit l = 0; l < n; ++l) {
      if (z >> end_slot[l] & 1) x |= std::size_t{1} << l;
    }
    permuted.amplitudes[z] = original_sv.amplitudes[x];
  }
  return 1.0 - StateVector::overlap(routed_sv, permuted) <= tol;
}

RoutingCheck check_routed(const Circuit& original, const RoutedCircuit& routed,
                          const HardwareModel& hw, double tol) {
  RoutingCheck check;
  check.legal = is_hardware_legal(routed, hw);
  if (original.n <= kMaxSimQubits) {
    check.checked_equivalence = true;
    try {
      check.equivalent = equivalent_under_permutation(original, routed, tol);
    } catch (const Error&) {
      // a gate outside the partition or a mangled mapping is a failure,
      // not a crash, when vetting untrusted routed circuits
      check.equivalent = false;
    }
  }
  return check;
}

BruteForceMapping brute_force_mapping_argmax(const Circuit& circuit, const Partition& partition,
                                             const HardwareModel& hw, const RouterConfig& cfg) {
  if (partition.qubits.size() > 6)
    throw Error("brute-force mapping search limited to 6 qubits");
  Mapping perm = partition.qubits;
  std::sort(perm.begin(), perm.end());

  BruteForceMapping best;
  bool have = false;
  do {
    const RoutedCircuit routed = route(circuit, partition, perm, hw, cfg);
    const double score = epst_star(routed.circuit, perm, hw).epst_star;
    if (!have || score > best.score) {
      best.mapping = perm;
      best.score = score;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace naqjs
