// Copyright 2026 The mcroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <algorithm>
#include <vector>

#include "mcroute/architecture.hpp"
#include "mcroute/circuit.hpp"
#include "mcroute/layout.hpp"

namespace mcroute {

/// Tuning knobs for the heuristic search. Unset optionals resolve against the
/// architecture (capacity penalty = N, stall bound = 10 N, release valve at
/// max(8, N / 4) capped by half the stall bound). The weights default to
/// values that favour keeping qubits resident over repeated telegates.
struct RouterParams {
  double lookahead_k = 4.0;
  std::size_t extended_size = 10;
  double decay_delta = 0.001;
  std::optional<double> capacity_penalty;
  double traffic_coeff = 0.5;
  double teleport_base_weight = 8.0;
  std::optional<int> max_stall;
  // Stalled movements after which the oldest front gate is forced through
  // greedily; 0 disables the valve.
  std::optional<int> release_after;
  std::uint64_t seed = 0;

  double resolved_capacity_penalty(const Architecture& arch) const {
    return capacity_penalty.value_or(static_cast<double>(arch.num_qubits()));
  }
  int resolved_max_stall(const Architecture& arch) const {
    return max_stall.value_or(10 * arch.num_qubits());
  }
  int resolved_release_after(const Architecture& arch) const {
    return release_after.value_or(
        std::min(std::max(8, arch.num_qubits() / 4), resolved_max_stall(arch) / 2));
  }
  /// Throws PreconditionError on negative weights or a zero stall bound.
  void validate() const;
};

/// Facts about the communication qubits of one layout, shared by every
/// contracted graph built while scoring that layout.
struct CommContext {
  std::vector<int> free_distance;  // indexed by physical qubit; comm qubits only
  std::vector<char> core_full;     // free count < 2
};

CommContext comm_context(const Layout& layout);

/// Per-link use counts accumulated over one scoring round.
class LinkTraffic {
 public:
  explicit LinkTraffic(std::size_t num_links) : uses_(num_links, 0) {}
  void add(int link) { ++uses_[static_cast<std::size_t>(link)]; }
  int uses(int link) const { return uses_[static_cast<std::size_t>(link)]; }

 private:
  std::vector<int> uses_;
};

/// Routing graph for one cross-core gate: the two gate qubits plus every
/// communication qubit, with hop-equivalent edge weights.
///
/// Node 0 hosts the gate's first qubit, node 1 the second; the rest are the
/// communication qubits in increasing physical id. A gate qubit sitting on a
/// comm qubit still gets its own node.
struct ContractedGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    double weight = 0.0;
    int link = -1;  // index into Architecture::links(), or -1
  };

  static constexpr int source = 0;
  static constexpr int target = 1;

  std::vector<int> nodes;  // physical qubit per node
  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident;  // node -> edge indices
  std::vector<double> freeing_cost;        // hop distance to nearest free qubit, per node
  std::vector<char> core_full;

  int other(int edge, int node) const {
    const auto& e = edges[static_cast<std::size_t>(edge)];
    return e.u == node ? e.v : e.u;
  }
};

/// Edge rules:
///  - comm-comm in one core: D[c1][c2];
///  - gate qubit to each comm of its core: |D[p][c] - 1|;
///  - each link: teleport_base_weight (+ traffic_coeff per prior use);
///  - every edge incident to comm c: + nearest_free(c).distance / 2;
///  - every edge incident to a comm of a core with < 2 free: + capacity
///    penalty, except for the two cores holding the gate's qubits (leaving
///    a full core relieves it; only passing through one is discouraged).
/// Throws PreconditionError if both gate qubits share a core.
ContractedGraph build_contracted_graph(const Layout& layout, const Gate& gate,
                                       const RouterParams& params, const CommContext& ctx,
                                       const LinkTraffic* traffic = nullptr);
ContractedGraph build_contracted_graph(const Layout& layout, const Gate& gate,
                                       const RouterParams& params);

struct Route {
  double length = 0.0;
  std::vector<int> path;   // node indices, source first
  std::vector<int> links;  // architecture links crossed, in path order
};

/// Dijkstra over the contracted graph. Among minimum-length paths the
/// lexicographically smallest node sequence wins. nullopt when unreachable.
std::optional<Route> route(const ContractedGraph& graph, int src, int dst);

/// Energy of one gate: hop distance when co-located, contracted-graph route
/// length otherwise. When `traffic` is given the route sees its counts;
/// with `record` the crossed links are added to it.
std::optional<double> gate_energy(const Layout& layout, const Gate& gate,
                                  const RouterParams& params, const CommContext& ctx,
                                  LinkTraffic* traffic = nullptr, bool record = false);
std::optional<double> gate_energy(const Layout& layout, const Gate& gate,
                                  const RouterParams& params);

/// Lookahead-weighted energy
///   (1/|F|) sum_F energy + (k/|H|) sum_H energy
/// Front gates are routed in order and load the links they cross; extended
/// set gates see that traffic. An unroutable front gate makes the whole
/// energy nullopt; an unroutable extended gate costs 10 N instead.
///
/// `front_denominator` overrides |F| (used when a candidate removes a gate
/// from F but the mean must stay comparable with its siblings).
std::optional<double> total_energy(const Layout& layout, const CircuitDag& dag,
                                   std::span<const GateId> front,
                                   std::span<const GateId> extended, const RouterParams& params,
                                   std::size_t front_denominator = 0);

}  // namespace mcroute
