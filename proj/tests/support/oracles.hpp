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

// Independent reference computations for tests. Nothing here calls into the
// library's distance table, router, or Dijkstra; only the data types are
// shared.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mcroute/architecture.hpp"
#include "mcroute/circuit.hpp"
#include "mcroute/energy.hpp"
#include "mcroute/layout.hpp"

namespace oracle {

using mcroute::Architecture;
using mcroute::CircuitDag;
using mcroute::ContractedGraph;
using mcroute::CoreSpec;
using mcroute::Gate;
using mcroute::Layout;
using mcroute::Link;
using mcroute::RouterParams;

inline constexpr int kInf = -1;

/// Per-source BFS over intra-core edges; -1 when unreachable.
inline std::vector<std::vector<int>> bfs_distances(const Architecture& arch) {
  const int n = arch.num_qubits();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& core : arch.cores())
    for (const auto& [a, b] : core.edges) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), kInf));
  for (int s = 0; s < n; ++s) {
    auto& d = dist[static_cast<std::size_t>(s)];
    d[static_cast<std::size_t>(s)] = 0;
    std::deque<int> open{s};
    while (!open.empty()) {
      const int u = open.front();
      open.pop_front();
      for (int v : adj[static_cast<std::size_t>(u)])
        if (d[static_cast<std::size_t>(v)] == kInf) {
          d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
          open.push_back(v);
        }
    }
  }
  return dist;
}

struct PathResult {
  double length = 0.0;
  std::vector<int> path;
};

/// Minimum over every simple path by exhaustive DFS; ties broken by the
/// lexicographically smallest node sequence.
inline std::optional<PathResult> enumerate_paths(const ContractedGraph& g, int src, int dst) {
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const auto& e : g.edges) {
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.weight);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.weight);
  }
  std::optional<PathResult> best;
  std::vector<int> path{src};
  std::vector<char> on_path(n, 0);
  on_path[static_cast<std::size_t>(src)] = 1;
  std::function<void(int, double)> dfs = [&](int u, double len) {
    if (u == dst) {
      if (!best || len < best->length || (len == best->length && path < best->path))
        best = PathResult{len, path};
      return;
    }
    for (const auto& [v, w] : adj[static_cast<std::size_t>(u)]) {
      if (on_path[static_cast<std::size_t>(v)]) continue;
      on_path[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      dfs(v, len + w);
      path.pop_back();
      on_path[static_cast<std::size_t>(v)] = 0;
    }
  };
  dfs(src, 0.0);
  return best;
}

/// Random graph in ContractedGraph form with `n` nodes, random weights that
/// are multiples of 0.5, and occasional parallel edges.
inline ContractedGraph random_graph(std::mt19937_64& rng, int n, double density) {
  ContractedGraph g;
  for (int i = 0; i < n; ++i) g.nodes.push_back(i);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> half_units(0, 12);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!keep(rng)) continue;
      g.edges.push_back({u, v, 0.5 * half_units(rng), -1});
      if (keep(rng) && keep(rng)) g.edges.push_back({u, v, 0.5 * half_units(rng), -1});
    }
  g.incident.assign(static_cast<std::size_t>(n), {});
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    g.incident[static_cast<std::size_t>(g.edges[e].u)].push_back(static_cast<int>(e));
    g.incident[static_cast<std::size_t>(g.edges[e].v)].push_back(static_cast<int>(e));
  }
  g.freeing_cost.assign(static_cast<std::size_t>(n), 0.0);
  return g;
}

/// Energy of one gate written directly from the definition: hop distance
/// within a core; otherwise the cheapest route over gate qubits and comm
/// qubits, computed with Floyd-Warshall on a freshly built weight matrix.
/// `link_uses` counts earlier uses of each link this round.
inline std::optional<double> gate_energy(const Layout& layout, const Gate& gate,
                                         const RouterParams& params,
                                         const std::vector<int>& link_uses = {}) {
  const auto& arch = layout.arch();
  const auto dist = bfs_distances(arch);
  const int pa = layout.phys(gate.qubits[0]);
  const int pb = layout.phys(gate.qubits[1]);
  if (arch.core_of(pa) == arch.core_of(pb))
    return dist[static_cast<std::size_t>(pa)][static_cast<std::size_t>(pb)];

  std::vector<int> comms;
  for (int p = 0; p < arch.num_qubits(); ++p)
    if (arch.is_comm(p)) comms.push_back(p);
  std::vector<int> nodes{pa, pb};
  nodes.insert(nodes.end(), comms.begin(), comms.end());
  const std::size_t n = nodes.size();

  auto free_in_core = [&](int core) {
    int free = 0;
    for (int p : arch.core(core).qubits) free += layout.is_free(p);
    return free;
  };
  auto surcharge = [&](int p) {
    int nearest = std::numeric_limits<int>::max();
    for (int f : arch.core(arch.core_of(p)).qubits)
      if (layout.is_free(f))
        nearest = std::min(nearest, dist[static_cast<std::size_t>(p)][static_cast<std::size_t>(f)]);
    double extra = nearest / 2.0;
    // Full cores are only penalised when the route would pass through them,
    // never for the cores already holding the gate's qubits.
    const int core = arch.core_of(p);
    if (free_in_core(core) < 2 && core != arch.core_of(pa) && core != arch.core_of(pb))
      extra += params.capacity_penalty.value_or(arch.num_qubits());
    return extra;
  };

  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> w(n, std::vector<double>(n, inf));
  auto relax = [&](std::size_t i, std::size_t j, double weight) {
    w[i][j] = std::min(w[i][j], weight);
    w[j][i] = std::min(w[j][i], weight);
  };
  for (std::size_t i = 0; i < n; ++i) w[i][i] = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 2; j < n; ++j)
      if (arch.core_of(nodes[i]) == arch.core_of(nodes[j]))
        relax(i, j, std::abs(dist[static_cast<std::size_t>(nodes[i])][static_cast<std::size_t>(nodes[j])] - 1) +
                        surcharge(nodes[j]));
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (arch.core_of(nodes[i]) == arch.core_of(nodes[j]))
        relax(i, j, dist[static_cast<std::size_t>(nodes[i])][static_cast<std::size_t>(nodes[j])] +
                        surcharge(nodes[i]) + surcharge(nodes[j]));
  const auto links = arch.links();
  auto comm_node = [&](int p) {
    return static_cast<std::size_t>(std::find(nodes.begin() + 2, nodes.end(), p) - nodes.begin());
  };
  for (std::size_t l = 0; l < links.size(); ++l) {
    const double uses = l < link_uses.size() ? link_uses[l] : 0;
    relax(comm_node(links[l].a), comm_node(links[l].b),
          params.teleport_base_weight + params.traffic_coeff * uses + surcharge(links[l].a) +
              surcharge(links[l].b));
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i][j] = std::min(w[i][j], w[i][k] + w[k][j]);
  if (w[0][1] == inf) return std::nullopt;
  return w[0][1];
}

/// Weighted mean over the front plus k times the mean over the extended set.
inline std::optional<double> total_energy(const Layout& layout, const CircuitDag& dag,
                                          const std::vector<int>& front,
                                          const std::vector<int>& extended,
                                          const RouterParams& params) {
  double f = 0;
  for (int g : front) {
    auto e = oracle::gate_energy(layout, dag.gate(g), params);
    if (!e) return std::nullopt;
    f += *e;
  }
  double h = 0;
  for (int g : extended) h += oracle::gate_energy(layout, dag.gate(g), params).value_or(10.0 * layout.num_physical());
  double total = f / static_cast<double>(front.size());
  if (!extended.empty()) total += params.lookahead_k * h / static_cast<double>(extended.size());
  return total;
}

/// Modular architecture with random connected cores and a random connected
/// link topology. Every core gets 1-2 comm qubits.
inline Architecture random_architecture(std::mt19937_64& rng, int cores, int per_core) {
  std::vector<CoreSpec> specs;
  int next = 0;
  for (int c = 0; c < cores; ++c) {
    CoreSpec s;
    for (int i = 0; i < per_core; ++i) s.qubits.push_back(next++);
    std::set<std::pair<int, int>> edges;
    for (int i = 1; i < per_core; ++i) {
      std::uniform_int_distribution<int> parent(0, i - 1);
      edges.emplace(s.qubits[static_cast<std::size_t>(parent(rng))], s.qubits[static_cast<std::size_t>(i)]);
    }
    std::uniform_int_distribution<int> any(0, per_core - 1);
    for (int extra = 0; extra < per_core / 3; ++extra) {
      int a = s.qubits[static_cast<std::size_t>(any(rng))];
      int b = s.qubits[static_cast<std::size_t>(any(rng))];
      if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
    }
    s.edges.assign(edges.begin(), edges.end());
    std::vector<int> pool = s.qubits;
    std::shuffle(pool.begin(), pool.end(), rng);
    const int comm = cores > 1 ? std::min(per_core - 1, 1 + static_cast<int>(rng() % 2)) : 0;
    s.comm_qubits.assign(pool.begin(), pool.begin() + comm);
    std::sort(s.comm_qubits.begin(), s.comm_qubits.end());
    specs.push_back(std::move(s));
  }
  std::vector<Link> links;
  auto pick_comm = [&](int core) {
    const auto& cs = specs[static_cast<std::size_t>(core)].comm_qubits;
    return cs[rng() % cs.size()];
  };
  for (int c = 1; c < cores; ++c) {
    const int other = static_cast<int>(rng() % static_cast<std::uint64_t>(c));
    links.push_back({pick_comm(other), pick_comm(c)});
  }
  if (cores > 2) {
    const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(cores));
    const int b = static_cast<int>(rng() % static_cast<std::uint64_t>(cores));
    if (a != b) links.push_back({pick_comm(a), pick_comm(b)});
  }
  return Architecture(std::move(specs), std::move(links));
}

/// Random placement of `n` logical qubits leaving at least `slack` free
/// qubits in every core.
inline Layout random_layout(const Architecture& arch, int n, std::mt19937_64& rng, int slack = 1) {
  std::vector<int> room;
  for (const auto& core : arch.cores()) {
    std::vector<int> qs = core.qubits;
    std::shuffle(qs.begin(), qs.end(), rng);
    qs.resize(qs.size() - static_cast<std::size_t>(slack));
    room.insert(room.end(), qs.begin(), qs.end());
  }
  std::shuffle(room.begin(), room.end(), rng);
  room.resize(static_cast<std::size_t>(n));
  return Layout(arch, room);
}

}  // namespace oracle
