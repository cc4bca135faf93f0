#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "naqjs/circuit.hpp"
#include "naqjs/circuit_io.hpp"
#include "naqjs/dag.hpp"
#include "naqjs/statevector.hpp"

using namespace naqjs;

TEST_CASE("qasm: single gate") {
  const Circuit c = parse_circuit("OPENQASM 2.0;\nqreg q[1];\nx q[0];\n", CircuitFormat::Qasm2Subset);
  CHECK(c.n == 1);
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0] == GateOp::x(0));
}

TEST_CASE("qasm: cx and whole-register measure") {
  const Circuit c = parse_circuit(
      "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[2];\n"
      "cx q[0],q[1];\nmeasure q -> c;\n",
      CircuitFormat::Qasm2Subset);
  CHECK(c.n == 2);
  REQUIRE(c.gates.size() == 3);
  CHECK(c.gates[0] == GateOp::cx(0, 1));
  CHECK(c.gates[1] == GateOp::measure(0));
  CHECK(c.gates[2] == GateOp::measure(1));
}

TEST_CASE("qasm: arity error reported with position") {
  CHECK_THROWS_AS(parse_circuit("OPENQASM 2.0;\nqreg q[2];\ncx q[0];\n", CircuitFormat::Qasm2Subset),
                  ParseError);
  try {
    parse_circuit("OPENQASM 2.0;\nqreg q[2];\ncx q[0];\n", CircuitFormat::Qasm2Subset);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("qasm: unsupported gate and out-of-range index") {
  CHECK_THROWS_AS(parse_circuit("OPENQASM 2.0;\nqreg q[2];\nh q[0];\n", CircuitFormat::Qasm2Subset),
                  ParseError);
  CHECK_THROWS_AS(parse_circuit("OPENQASM 2.0;\nqreg q[2];\nx q[2];\n", CircuitFormat::Qasm2Subset),
                  ParseError);
}

TEST_CASE("qasm: rz angle expressions") {
  const Circuit c = parse_circuit(
      "OPENQASM 2.0;\nqreg q[1];\nrz(pi/2) q[0];\nrz(-pi/4) q[0];\nrz(0.25) q[0];\nrz(2*pi) q[0];\n",
      CircuitFormat::Qasm2Subset);
  REQUIRE(c.gates.size() == 4);
  CHECK(c.gates[0].theta == doctest::Approx(M_PI / 2));
  CHECK(c.gates[1].theta == doctest::Approx(-M_PI / 4));
  CHECK(c.gates[2].theta == doctest::Approx(0.25));
  CHECK(c.gates[3].theta == doctest::Approx(2 * M_PI));
}

TEST_CASE("parse -> serialize -> parse is a fixed point (both formats)") {
  std::mt19937 rng(11);
  testing::CircuitOptions opt;
  opt.with_barrier = true;
  opt.with_composites = true;
  for (int i = 0; i < 50; ++i) {
    const Circuit c = testing::random_circuit(rng, 2 + i % 7, 1 + i % 40, opt);
    for (const auto format : {CircuitFormat::Qasm2Subset, CircuitFormat::Json}) {
      const Circuit once = parse_circuit(serialize_circuit(c, format), format);
      const Circuit twice = parse_circuit(serialize_circuit(once, format), format);
      CHECK(once == twice);
      CHECK(once == c);
    }
  }
}

TEST_CASE("dag: three-qubit example has transitive dependencies") {
  // g1=X(0), g2=X(1), g3=CX(0,1), g4=CX(1,2), g5=X(2), g6=CX(0,1):
  // g4 can only run after g1, g2, g3 have run.
  Circuit c;
  c.n = 3;
  c.gates = {GateOp::x(0), GateOp::x(1), GateOp::cx(0, 1),
             GateOp::cx(1, 2), GateOp::x(2), GateOp::cx(0, 1)};
  const CircuitDag dag = build_dag(c);
  CHECK(dag.is_acyclic());

  // ancestor set of g4 (index 3)
  std::vector<std::vector<std::size_t>> preds(c.gates.size());
  for (std::size_t u = 0; u < c.gates.size(); ++u)
    for (std::size_t v : dag.successors[u]) preds[v].push_back(u);
  std::set<std::size_t> ancestors;
  std::vector<std::size_t> todo = {3};
  while (!todo.empty()) {
    const auto v = todo.back();
    todo.pop_back();
    for (auto u : preds[v])
      if (ancestors.insert(u).second) todo.push_back(u);
  }
  CHECK(ancestors == std::set<std::size_t>{0, 1, 2});
}

TEST_CASE("dag: empty circuit and parallel 1q gates") {
  Circuit empty;
  empty.n = 3;
  CHECK(build_dag(empty).num_gates == 0);

  Circuit par;
  par.n = 5;
  for (Qubit q = 0; q < 5; ++q) par.gates.push_back(GateOp::x(q));
  const CircuitDag dag = build_dag(par);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(dag.successors[i].empty());
    CHECK(dag.in_degree[i] == 0);
  }
}

TEST_CASE("dag: acyclic and order-preserving per qubit on random circuits") {
  std::mt19937 rng(12);
  testing::CircuitOptions opt;
  opt.with_barrier = true;
  for (int i = 0; i < 100; ++i) {
    const Circuit c = testing::random_circuit(rng, 2 + i % 8, 1 + i % 60, opt);
    const CircuitDag dag = build_dag(c);
    REQUIRE(dag.is_acyclic());
    const auto order = dag.topological_order();
    // replaying the topological order preserves per-qubit gate order
    std::vector<std::size_t> position(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
    std::vector<std::size_t> last_pos(c.n, 0);
    std::vector<bool> seen(c.n, false);
    for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
      for (Qubit q : c.gates[gi].qubits) {
        if (seen[q]) CHECK(position[gi] > last_pos[q]);
        last_pos[q] = position[gi];
        seen[q] = true;
      }
    }
  }
}

TEST_CASE("circuit_time: hand-traced examples") {
  const GateDurations d{50.0, 300.0, 1000.0};
  Circuit empty;
  empty.n = 2;
  CHECK(circuit_time(empty, d) == 0.0);

  Circuit seq;
  seq.n = 2;
  seq.gates = {GateOp::x(0), GateOp::cx(0, 1)};
  CHECK(circuit_time(seq, d) == 350.0);

  Circuit par;
  par.n = 2;
  par.gates = {GateOp::x(0), GateOp::x(1)};
  CHECK(circuit_time(par, d) == 50.0);
}

TEST_CASE("circuit_time: equals linear-scan reference on random circuits") {
  std::mt19937 rng(13);
  const GateDurations d{50.0, 300.0, 1000.0};
  testing::CircuitOptions opt;
  opt.with_barrier = true;
  opt.with_composites = true;
  for (int i = 0; i < 300; ++i) {
    const Circuit c = testing::random_circuit(rng, 2 + i % 8, 1 + i % 80, opt);
    CHECK(circuit_time(c, d) == testing::linear_scan_time(c, d));
  }
}

TEST_CASE("circuit_time: monotone under appending") {
  std::mt19937 rng(14);
  const GateDurations d{50.0, 300.0, 1000.0};
  for (int i = 0; i < 50; ++i) {
    Circuit c = testing::random_circuit(rng, 3, 1 + i % 30, {.with_measure = false});
    const double before = circuit_time(c, d);
    std::uniform_int_distribution<Qubit> pick(0, 2);
    Qubit a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    c.gates.push_back(i % 2 ? GateOp::cx(a, b) : GateOp::x(a));
    CHECK(circuit_time(c, d) >= before);
  }
}

TEST_CASE("reverse_circuit: gate order, measures, involution") {
  Circuit c;
  c.n = 2;
  c.gates = {GateOp::cx(0, 1), GateOp::x(0)};
  const Circuit r = reverse_circuit(c);
  REQUIRE(r.gates.size() == 2);
  CHECK(r.gates[0] == GateOp::x(0));
  CHECK(r.gates[1] == GateOp::cx(0, 1));

  Circuit single;
  single.n = 1;
  single.gates = {GateOp::x(0)};
  CHECK(reverse_circuit(single) == single);

  Circuit with_measure;
  with_measure.n = 2;
  with_measure.gates = {GateOp::cx(0, 1), GateOp::x(1), GateOp::measure(0), GateOp::measure(1)};
  const Circuit rev = reverse_circuit(with_measure);
  REQUIRE(rev.gates.size() == 4);
  CHECK(rev.gates[0] == GateOp::x(1));
  CHECK(rev.gates[1] == GateOp::cx(0, 1));
  CHECK(rev.gates[2] == GateOp::measure(0));
  CHECK(reverse_circuit(rev) == with_measure);
}

TEST_CASE("expand_composites: swap and bridge shapes") {
  Circuit swap;
  swap.n = 2;
  swap.gates = {GateOp::swap(0, 1)};
  const Circuit es = expand_composites(swap);
  REQUIRE(es.gates.size() == 3);
  for (const auto& g : es.gates) CHECK(g.kind == GateKind::CX);

  Circuit bridge;
  bridge.n = 3;
  bridge.gates = {GateOp::bridge(0, 1, 2)};
  const Circuit eb = expand_composites(bridge);
  REQUIRE(eb.gates.size() == 4);
  for (const auto& g : eb.gates) CHECK(g.kind == GateKind::CX);

  Circuit plain;
  plain.n = 2;
  plain.gates = {GateOp::cx(0, 1), GateOp::x(0)};
  CHECK(expand_composites(plain) == plain);
}

namespace {

// Reference semantics for composites, independent of expand_composites:
// SWAP permutes the two bits of every amplitude index, BRIDGE acts as a
// plain long-range CX between control and target.
StateVector reference_simulate(const Circuit& c) {
  StateVector sv;
  sv.amplitudes.assign(std::size_t{1} << c.n, {0.0, 0.0});
  sv.amplitudes[0] = {1.0, 0.0};
  auto apply_swap = [&](Qubit a, Qubit b) {
    const std::size_t abit = std::size_t{1} << a, bbit = std::size_t{1} << b;
    for (std::size_t i = 0; i < sv.amplitudes.size(); ++i) {
      const bool ba = i & abit, bb = i & bbit;
      if (ba && !bb) std::swap(sv.amplitudes[i], sv.amplitudes[(i & ~abit) | bbit]);
    }
  };
  auto apply_cx = [&](Qubit control, Qubit target) {
    const std::size_t cbit = std::size_t{1} << control, tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < sv.amplitudes.size(); ++i)
      if ((i & cbit) && !(i & tbit)) std::swap(sv.amplitudes[i], sv.amplitudes[i | tbit]);
  };
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::Swap) {
      apply_swap(g.qubits[0], g.qubits[1]);
    } else if (g.kind == GateKind::Bridge) {
      apply_cx(g.qubits[0], g.qubits[2]);
    } else {
      if (g.kind == GateKind::CX) {
        apply_cx(g.qubits[0], g.qubits[1]);
      } else if (g.kind == GateKind::CZ) {
        const std::size_t ab = (std::size_t{1} << g.qubits[0]) | (std::size_t{1} << g.qubits[1]);
        for (std::size_t i = 0; i < sv.amplitudes.size(); ++i)
          if ((i & ab) == ab) sv.amplitudes[i] = -sv.amplitudes[i];
      } else if (g.kind == GateKind::X) {
        const std::size_t qbit = std::size_t{1} << g.qubits[0];
        for (std::size_t i = 0; i < sv.amplitudes.size(); ++i)
          if (!(i & qbit)) std::swap(sv.amplitudes[i], sv.amplitudes[i | qbit]);
      } else if (g.kind == GateKind::SX || g.kind == GateKind::RZ) {
        const std::size_t qbit = std::size_t{1} << g.qubits[0];
        const std::complex<double> m00 =
            g.kind == GateKind::SX ? std::complex<double>(0.5, 0.5) : std::polar(1.0, -g.theta / 2);
        const std::complex<double> m01 =
            g.kind == GateKind::SX ? std::complex<double>(0.5, -0.5) : std::complex<double>(0.0);
        const std::complex<double> m10 = m01;
        const std::complex<double> m11 =
            g.kind == GateKind::SX ? std::complex<double>(0.5, 0.5) : std::polar(1.0, g.theta / 2);
        for (std::size_t i = 0; i < sv.amplitudes.size(); ++i) {
          if (i & qbit) continue;
          const auto a0 = sv.amplitudes[i];
          const auto a1 = sv.amplitudes[i | qbit];
          sv.amplitudes[i] = m00 * a0 + m01 * a1;
          sv.amplitudes[i | qbit] = m10 * a0 + m11 * a1;
        }
      }
    }
  }
  return sv;
}

}  // namespace

TEST_CASE("expand_composites: preserves the statevector") {
  // bridge acts as a long-range CX
  Circuit direct;
  direct.n = 3;
  direct.gates = {GateOp::x(0), GateOp::sx(1), GateOp::cx(0, 2)};
  Circuit bridged;
  bridged.n = 3;
  bridged.gates = {GateOp::x(0), GateOp::sx(1), GateOp::bridge(0, 1, 2)};
  CHECK(StateVector::overlap(simulate_state(direct), simulate_state(bridged)) ==
        doctest::Approx(1.0).epsilon(1e-9));

  std::mt19937 rng(15);
  testing::CircuitOptions opt;
  opt.with_composites = true;
  opt.with_measure = false;
  for (int i = 0; i < 40; ++i) {
    const Circuit c = testing::random_circuit(rng, 3 + i % 6, 5 + i % 25, opt);
    const StateVector expanded = simulate_state(expand_composites(c));
    const StateVector reference = reference_simulate(c);
    CHECK(StateVector::overlap(expanded, reference) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("validate_circuit: rejects malformed gates") {
  Circuit bad;
  bad.n = 2;
  bad.gates = {GateOp{GateKind::CX, {0}}};
  CHECK_THROWS_AS(validate_circuit(bad), Error);
  bad.gates = {GateOp{GateKind::CX, {0, 0}}};
  CHECK_THROWS_AS(validate_circuit(bad), Error);
  bad.gates = {GateOp{GateKind::X, {5}}};
  CHECK_THROWS_AS(validate_circuit(bad), Error);
}
