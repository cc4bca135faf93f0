#include "naqjs/mapper.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <numeric>
#include <tuple>

#include "naqjs/dag.hpp"

namespace naqjs {

namespace {

// Routing state over partition-local qubit indices 0..k-1.
struct Router {
  const Circuit& circuit;
  const Partition& partition;
  const HardwareModel& hw;
  const RouterConfig& cfg;

  std::size_t k;                       // partition size
  std::vector<Qubit> local_of_phys;    // device qubit -> local index (or k)
  std::vector<std::vector<Qubit>> adj; // local adjacency of the induced subgraph
  std::vector<std::vector<double>> dist_noise;
  std::vector<std::vector<double>> dist_hops;

  CircuitDag dag;
  std::vector<int> in_degree;
  std::vector<bool> emitted;
  std::vector<std::size_t> front;      // ready gate indices, kept sorted

  std::vector<Qubit> log_to_local;     // current mapping, logical -> local
  std::vector<Qubit> local_to_log;     // inverse (k = unoccupied impossible: bijection)

  std::vector<double> decay;
  int insertions_since_reset = 0;
  int stalled_insertions = 0;

  RoutedCircuit out;

  Router(const Circuit& c, const Partition& p, const Mapping& initial, const HardwareModel& hw_,
         const RouterConfig& cfg_)
      : circuit(c), partition(p), hw(hw_), cfg(cfg_) {
    k = partition.qubits.size();
    if (circuit.n != k) throw Error("mapping width mismatch: circuit " +
                                    std::to_string(circuit.n) + " vs partition " + std::to_string(k));
    local_of_phys.assign(hw.num_qubits(), static_cast<Qubit>(k));
    for (std::size_t i = 0; i < k; ++i) local_of_phys[partition.qubits[i]] = static_cast<Qubit>(i);

    adj.assign(k, {});
    for (const auto& [a, b] : hw.graph.edges) {
      const Qubit la = local_of_phys[a], lb = local_of_phys[b];
      if (la < k && lb < k) {
        adj[la].push_back(lb);
        adj[lb].push_back(la);
      }
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    dist_noise = subset_distance_matrix(hw, partition.qubits, true);
    dist_hops = subset_distance_matrix(hw, partition.qubits, false);

    log_to_local.assign(k, 0);
    local_to_log.assign(k, 0);
    for (Qubit l = 0; l < k; ++l) {
      const Qubit ph = initial[l];
      const Qubit loc = local_of_phys[ph];
      if (loc >= k) throw Error("initial mapping targets qubit outside the partition");
      log_to_local[l] = loc;
      local_to_log[loc] = l;
    }

    dag = build_dag(circuit);
    in_degree = dag.in_degree;
    emitted.assign(circuit.gates.size(), false);
    for (std::size_t i = 0; i < circuit.gates.size(); ++i)
      if (in_degree[i] == 0) front.push_back(i);

    decay.assign(k, 1.0);
    out.circuit.n = hw.num_qubits();
    out.initial_mapping = initial;
  }

  double edge_error(Qubit la, Qubit lb) const {
    return 1.0 - hw.cal.edge_reliability(partition.qubits[la], partition.qubits[lb]);
  }

  bool executable(const GateOp& g) const {
    if (is_two_qubit_gate(g.kind))
      return dist_hops[log_to_local[g.qubits[0]]][log_to_local[g.qubits[1]]] == 1.0;
    return true;  // 1q, measure, barrier
  }

  void release_successors(std::size_t gi) {
    for (std::size_t s : dag.successors[gi]) {
      if (--in_degree[s] == 0) {
        front.insert(std::upper_bound(front.begin(), front.end(), s), s);
      }
    }
  }

  void emit_gate(std::size_t gi) {
    const GateOp& g = circuit.gates[gi];
    GateOp mapped = g;
    for (auto& q : mapped.qubits) q = partition.qubits[log_to_local[q]];
    out.circuit.gates.push_back(std::move(mapped));
    emitted[gi] = true;
    release_successors(gi);
  }

  // Emits every currently executable front gate; returns whether any fired.
  bool flush_front() {
    bool progress = false;
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t idx = 0; idx < front.size(); ++idx) {
        const std::size_t gi = front[idx];
        if (!executable(circuit.gates[gi])) continue;
        front.erase(front.begin() + static_cast<std::ptrdiff_t>(idx));
        emit_gate(gi);
        progress = true;
        again = true;
        break;
      }
    }
    return progress;
  }

  std::vector<std::size_t> blocked_front() const {
    std::vector<std::size_t> f2;
    for (std::size_t gi : front)
      if (is_two_qubit_gate(circuit.gates[gi].kind)) f2.push_back(gi);
    return f2;
  }

  // First cfg.extended_size unemitted 2q gates beyond the front layer, in
  // gate-list order (a topological order of the DAG).
  std::vector<std::size_t> extended_set(const std::vector<std::size_t>& f2) const {
    std::vector<std::size_t> ext;
    for (std::size_t gi = 0; gi < circuit.gates.size() && ext.size() < cfg.extended_size; ++gi) {
      if (emitted[gi] || !is_two_qubit_gate(circuit.gates[gi].kind)) continue;
      if (std::binary_search(front.begin(), front.end(), gi)) continue;
      ext.push_back(gi);
    }
    (void)f2;
    return ext;
  }

  double gate_distance(std::size_t gi, const std::vector<Qubit>& mapping) const {
    const GateOp& g = circuit.gates[gi];
    return dist_noise[mapping[g.qubits[0]]][mapping[g.qubits[1]]];
  }

  double lookahead_cost(const std::vector<std::size_t>& f2, const std::vector<std::size_t>& ext,
                        const std::vector<Qubit>& mapping) const {
    double cost = 0.0;
    for (std::size_t gi : f2) cost += gate_distance(gi, mapping);
    if (!f2.empty()) cost /= static_cast<double>(f2.size());
    if (!ext.empty()) {
      double ecost = 0.0;
      for (std::size_t gi : ext) ecost += gate_distance(gi, mapping);
      cost += cfg.extended_weight * ecost / static_cast<double>(ext.size());
    }
    return cost;
  }

  // Front layer and lookahead as they would stand after resolving `gi` via a
  // BRIDGE: the gate leaves the front and its now-ready 2q successors join.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> after_bridge(
      const std::vector<std::size_t>& f2, const std::vector<std::size_t>& ext,
      std::size_t gi) const {
    std::vector<std::size_t> f2_next;
    for (std::size_t g : f2)
      if (g != gi) f2_next.push_back(g);
    std::vector<std::size_t> promoted;
    for (std::size_t s : dag.successors[gi]) {
      if (in_degree[s] == 1 && is_two_qubit_gate(circuit.gates[s].kind)) {
        f2_next.push_back(s);
        promoted.push_back(s);
      }
    }
    std::vector<std::size_t> ext_next;
    for (std::size_t g : ext)
      if (std::find(promoted.begin(), promoted.end(), g) == promoted.end()) ext_next.push_back(g);
    return {std::move(f2_next), std::move(ext_next)};
  }

  struct Candidate {
    bool is_bridge = false;
    Qubit a = 0, b = 0;       // local swap edge, or bridge (control, target)
    Qubit mid = 0;            // bridge middle
    std::size_t gate = 0;     // bridge: the front gate it resolves
    double cost = 0.0;

    std::tuple<double, int, Qubit, Qubit, Qubit> order_key(const Router& r) const {
      const Qubit pa = r.partition.qubits[a], pb = r.partition.qubits[b];
      const Qubit pm = is_bridge ? r.partition.qubits[mid] : 0;
      return {cost, is_bridge ? 0 : 1, std::min(pa, pb), std::max(pa, pb), pm};
    }
  };

  void commit_swap(Qubit la, Qubit lb) {
    out.circuit.gates.push_back(GateOp::swap(partition.qubits[la], partition.qubits[lb]));
    std::swap(local_to_log[la], local_to_log[lb]);
    log_to_local[local_to_log[la]] = la;
    log_to_local[local_to_log[lb]] = lb;
    ++out.swap_count;
    bump_decay({la, lb});
  }

  void commit_bridge(const Candidate& c) {
    out.circuit.gates.push_back(GateOp::bridge(partition.qubits[c.a], partition.qubits[c.mid],
                                               partition.qubits[c.b]));
    auto it = std::find(front.begin(), front.end(), c.gate);
    assert(it != front.end());
    front.erase(it);
    emitted[c.gate] = true;
    release_successors(c.gate);
    ++out.bridge_count;
    bump_decay({c.a, c.mid, c.b});
  }

  void bump_decay(std::initializer_list<Qubit> qs) {
    for (Qubit q : qs) decay[q] += cfg.decay_step;
    if (++insertions_since_reset >= cfg.decay_reset_interval) {
      std::fill(decay.begin(), decay.end(), 1.0);
      insertions_since_reset = 0;
    }
  }

  // Escape hatch: walk the first blocked gate one hop along its shortest
  // path. Guarantees termination when the heuristic ping-pongs.
  void forced_swap(std::size_t gi) {
    const GateOp& g = circuit.gates[gi];
    const Qubit src = log_to_local[g.qubits[0]];
    const Qubit dst = log_to_local[g.qubits[1]];
    Qubit step = src;
    double best = std::numeric_limits<double>::infinity();
    for (Qubit nb : adj[src]) {
      if (dist_hops[nb][dst] < best) {
        best = dist_hops[nb][dst];
        step = nb;
      }
    }
    commit_swap(src, step);
  }

  void insert_one() {
    const auto f2 = blocked_front();
    assert(!f2.empty());
    const auto ext = extended_set(f2);

    if (stalled_insertions > static_cast<int>(k) + 8) {
      forced_swap(f2.front());
      return;
    }

    std::vector<Candidate> candidates;

    // SWAPs on edges touching a blocked gate's qubits
    std::vector<bool> touched(k, false);
    for (std::size_t gi : f2)
      for (Qubit lq : circuit.gates[gi].qubits) touched[log_to_local[lq]] = true;
    std::vector<Qubit> trial = log_to_local;
    for (Qubit u = 0; u < k; ++u) {
      for (Qubit v : adj[u]) {
        if (v < u || (!touched[u] && !touched[v])) continue;
        std::swap(trial[local_to_log[u]], trial[local_to_log[v]]);
        Candidate c;
        c.a = u;
        c.b = v;
        const double self_cost = 3.0 * edge_error(u, v);
        c.cost = std::max(decay[u], decay[v]) * (lookahead_cost(f2, ext, trial) + self_cost);
        std::swap(trial[local_to_log[u]], trial[local_to_log[v]]);
        candidates.push_back(c);
      }
    }

    // BRIDGEs for CX gates at hop distance exactly 2
    for (std::size_t gi : f2) {
      const GateOp& g = circuit.gates[gi];
      if (g.kind != GateKind::CX) continue;
      const Qubit lc = log_to_local[g.qubits[0]];
      const Qubit lt = log_to_local[g.qubits[1]];
      if (dist_hops[lc][lt] != 2.0) continue;
      const auto [f2_next, ext_next] = after_bridge(f2, ext, gi);
      for (Qubit m : adj[lc]) {
        if (dist_hops[m][lt] != 1.0) continue;
        Candidate c;
        c.is_bridge = true;
        c.a = lc;
        c.b = lt;
        c.mid = m;
        c.gate = gi;
        const double self_cost = 2.0 * edge_error(lc, m) + 2.0 * edge_error(m, lt);
        c.cost = std::max({decay[lc], decay[m], decay[lt]}) *
                 (lookahead_cost(f2_next, ext_next, log_to_local) + self_cost);
        candidates.push_back(c);
      }
    }

    assert(!candidates.empty());
    const Candidate* best = &candidates[0];
    for (const auto& c : candidates)
      if (c.order_key(*this) < best->order_key(*this)) best = &c;

    if (best->is_bridge) {
      commit_bridge(*best);
      stalled_insertions = 0;  // a gate was resolved
    } else {
      commit_swap(best->a, best->b);
      ++stalled_insertions;
    }
  }

  RoutedCircuit run() {
    std::size_t remaining = circuit.gates.size();
    while (remaining > 0) {
      if (flush_front()) {
        remaining = std::count(emitted.begin(), emitted.end(), false);
        stalled_insertions = 0;
        continue;
      }
      insert_one();
      remaining = std::count(emitted.begin(), emitted.end(), false);
    }
    out.final_mapping.assign(k, 0);
    for (Qubit l = 0; l < k; ++l) out.final_mapping[l] = partition.qubits[log_to_local[l]];
    return std::move(out);
  }
};

}  // namespace

RoutedCircuit route(const Circuit& circuit, const Partition& partition, const Mapping& initial,
                    const HardwareModel& hw, const RouterConfig& cfg) {
  Router r(circuit, partition, initial, hw, cfg);
  return r.run();
}

InitialMappingResult initial_mapping(const Circuit& circuit, const Partition& partition,
                                     const HardwareModel& hw, int repeats, std::mt19937& rng,
                                     const RouterConfig& cfg) {
  if (repeats < 1) throw Error("initial_mapping requires repeats >= 1");
  Mapping seed = partition.qubits;
  std::shuffle(seed.begin(), seed.end(), rng);

  const Circuit reversed = reverse_circuit(circuit);
  InitialMappingResult best;
  bool have_best = false;
  Mapping current = seed;
  bool converged = false;
  for (int i = 0; i < repeats; ++i) {
    // routing is deterministic, so a converged chain would repeat itself;
    // restart from a fresh permutation to keep the candidates distinct
    if (converged) {
      current = partition.qubits;
      std::shuffle(current.begin(), current.end(), rng);
    }
    const Mapping chain_start = current;
    const RoutedCircuit forward = route(circuit, partition, current, hw, cfg);
    const RoutedCircuit backward = route(reversed, partition, forward.final_mapping, hw, cfg);
    current = backward.final_mapping;
    converged = current == chain_start;

    RoutedCircuit refined = route(circuit, partition, current, hw, cfg);
    const double score = epst_star(refined.circuit, refined.initial_mapping, hw).epst_star;
    best.candidate_scores.push_back(score);
    if (!have_best || score > best.score) {
      best.mapping = current;
      best.routed = std::move(refined);
      best.score = score;
      have_best = true;
    }
  }
  return best;
}

bool is_hardware_legal(const RoutedCircuit& routed, const HardwareModel& hw) {
  const Circuit expanded = expand_composites(routed.circuit);
  for (const auto& g : expanded.gates) {
    if (is_two_qubit_gate(g.kind) && !hw.graph.has_edge(g.qubits[0], g.qubits[1])) return false;
  }
  return true;
}

}  // namespace naqjs
