#include "naqjs/partition.hpp"

#include <algorithm>

namespace naqjs {

std::size_t RemainingGraph::available_count() const {
  return static_cast<std::size_t>(std::count(available.begin(), available.end(), true));
}

int RemainingGraph::degree(Qubit q) const {
  int d = 0;
  for (Qubit nb : adjacency[q])
    if (available[nb]) ++d;
  return d;
}

void RemainingGraph::allocate(const std::vector<Qubit>& qubits) {
  for (Qubit q : qubits) available[q] = false;
}

std::vector<Qubit> starting_points(const RemainingGraph& remaining, const Circuit& circuit) {
  const int logical_max = max_interaction_degree(circuit);
  std::vector<Qubit> above;
  std::vector<Qubit> maximal;
  int best_degree = -1;
  for (Qubit q = 0; q < remaining.available.size(); ++q) {
    if (!remaining.available[q]) continue;
    const int d = remaining.degree(q);
    if (d > logical_max) above.push_back(q);
    if (d > best_degree) {
      best_degree = d;
      maximal.clear();
    }
    if (d == best_degree) maximal.push_back(q);
  }
  return above.empty() ? maximal : above;
}

std::optional<Partition> grow_partition(Qubit start, Qubit width, const RemainingGraph& remaining,
                                        const HardwareModel& hw) {
  if (!remaining.available[start]) return std::nullopt;
  Partition part;
  part.starting_point = start;
  part.qubits.push_back(start);

  std::vector<bool> in_partition(remaining.available.size(), false);
  in_partition[start] = true;
  std::vector<Qubit> frontier;
  auto extend_frontier = [&](Qubit q) {
    for (Qubit nb : remaining.adjacency[q]) {
      if (remaining.available[nb] && !in_partition[nb] &&
          std::find(frontier.begin(), frontier.end(), nb) == frontier.end())
        frontier.push_back(nb);
    }
  };
  extend_frontier(start);

  while (part.qubits.size() < width) {
    if (frontier.empty()) return std::nullopt;
    std::size_t best = 0;
    double best_df = -1.0;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const double df = fidelity_degree(frontier[i], remaining.available, hw, remaining.adjacency);
      if (df > best_df || (df == best_df && frontier[i] < frontier[best])) {
        best_df = df;
        best = i;
      }
    }
    const Qubit chosen = frontier[best];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(best));
    part.qubits.push_back(chosen);
    in_partition[chosen] = true;
    extend_frontier(chosen);
  }
  return part;
}

std::optional<Partition> best_partition(const Circuit& circuit, const RemainingGraph& remaining,
                                        const HardwareModel& hw) {
  const Qubit width = circuit.n;
  if (width == 0 || width > remaining.available_count()) return std::nullopt;

  std::optional<Partition> best;
  std::vector<Qubit> best_sorted;
  for (Qubit start : starting_points(remaining, circuit)) {
    auto cand = grow_partition(start, width, remaining, hw);
    if (!cand) continue;
    cand->score = fidelity_score(cand->qubits, circuit, hw);
    std::vector<Qubit> sorted = cand->qubits;
    std::sort(sorted.begin(), sorted.end());
    if (!best || cand->score > best->score ||
        (cand->score == best->score && sorted < best_sorted)) {
      best = std::move(cand);
      best_sorted = std::move(sorted);
    }
  }
  return best;
}

}  // namespace naqjs
