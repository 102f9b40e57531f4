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

#include "mcroute/energy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <queue>

#include "mcroute/errors.hpp"

namespace mcroute {

void RouterParams::validate() const {
  if (lookahead_k < 0 || decay_delta < 0 || traffic_coeff < 0 || teleport_base_weight < 0 ||
      (capacity_penalty && *capacity_penalty < 0))
    throw PreconditionError("router weights must be non-negative");
  if (max_stall && *max_stall < 1) throw PreconditionError("max_stall must be >= 1");
  if (release_after && *release_after < 0) throw PreconditionError("release_after must be >= 0");
}

CommContext comm_context(const Layout& layout) {
  const auto& arch = layout.arch();
  CommContext ctx;
  ctx.free_distance.assign(static_cast<std::size_t>(arch.num_qubits()), 0);
  for (int c : arch.comm_qubits())
    ctx.free_distance[static_cast<std::size_t>(c)] = nearest_free(layout, c).distance;
  ctx.core_full.assign(static_cast<std::size_t>(arch.num_cores()), 0);
  for (int c = 0; c < arch.num_cores(); ++c)
    ctx.core_full[static_cast<std::size_t>(c)] = layout.free_count(c) < 2;
  return ctx;
}

ContractedGraph build_contracted_graph(const Layout& layout, const Gate& gate,
                                       const RouterParams& params, const CommContext& ctx,
                                       const LinkTraffic* traffic) {
  const auto& arch = layout.arch();
  const auto& d = arch.distances();
  const int pa = layout.phys(gate.qubits[0]);
  const int pb = layout.phys(gate.qubits[1]);
  if (arch.core_of(pa) == arch.core_of(pb))
    throw PreconditionError("contracted graph requested for a same-core gate");

  ContractedGraph g;
  const auto comms = arch.comm_qubits();
  g.nodes.reserve(comms.size() + 2);
  g.nodes.push_back(pa);
  g.nodes.push_back(pb);
  g.nodes.insert(g.nodes.end(), comms.begin(), comms.end());
  // Only cores the route would pass through are penalised; the gate's own
  // cores are left alone, since moving a qubit out relieves a full core.
  g.core_full = ctx.core_full;
  g.core_full[static_cast<std::size_t>(arch.core_of(pa))] = 0;
  g.core_full[static_cast<std::size_t>(arch.core_of(pb))] = 0;
  g.freeing_cost.assign(g.nodes.size(), 0.0);
  for (std::size_t i = 2; i < g.nodes.size(); ++i)
    g.freeing_cost[i] = ctx.free_distance[static_cast<std::size_t>(g.nodes[i])];

  // comm physical id -> node index
  std::vector<int> node_of(static_cast<std::size_t>(arch.num_qubits()), -1);
  for (std::size_t i = 2; i < g.nodes.size(); ++i)
    node_of[static_cast<std::size_t>(g.nodes[i])] = static_cast<int>(i);

  const double penalty = params.resolved_capacity_penalty(arch);
  // Freeing cost and capacity penalty that an edge pays for one comm endpoint.
  auto comm_surcharge = [&](int node) {
    const int p = g.nodes[static_cast<std::size_t>(node)];
    double extra = g.freeing_cost[static_cast<std::size_t>(node)] / 2.0;
    if (g.core_full[static_cast<std::size_t>(arch.core_of(p))]) extra += penalty;
    return extra;
  };
  auto add_edge = [&](int u, int v, double base, int link) {
    double w = base;
    if (u >= 2) w += comm_surcharge(u);
    if (v >= 2) w += comm_surcharge(v);
    g.edges.push_back({u, v, w, link});
  };

  for (int gate_node : {ContractedGraph::source, ContractedGraph::target}) {
    const int p = g.nodes[static_cast<std::size_t>(gate_node)];
    for (int c : arch.core(arch.core_of(p)).comm_qubits)
      add_edge(gate_node, node_of[static_cast<std::size_t>(c)], std::abs(d(p, c) - 1), -1);
  }
  for (const auto& core : arch.cores()) {
    const auto& cs = core.comm_qubits;
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j)
        add_edge(node_of[static_cast<std::size_t>(cs[i])], node_of[static_cast<std::size_t>(cs[j])],
                 d(cs[i], cs[j]), -1);
  }
  const auto links = arch.links();
  for (std::size_t li = 0; li < links.size(); ++li) {
    double w = params.teleport_base_weight;
    if (traffic) w += params.traffic_coeff * traffic->uses(static_cast<int>(li));
    add_edge(node_of[static_cast<std::size_t>(links[li].a)],
             node_of[static_cast<std::size_t>(links[li].b)], w, static_cast<int>(li));
  }

  g.incident.assign(g.nodes.size(), {});
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    g.incident[static_cast<std::size_t>(g.edges[e].u)].push_back(static_cast<int>(e));
    g.incident[static_cast<std::size_t>(g.edges[e].v)].push_back(static_cast<int>(e));
  }
  return g;
}

ContractedGraph build_contracted_graph(const Layout& layout, const Gate& gate,
                                       const RouterParams& params) {
  return build_contracted_graph(layout, gate, params, comm_context(layout));
}

namespace {

struct Label {
  double dist;
  std::vector<int> path;

  bool operator>(const Label& o) const {
    if (dist != o.dist) return dist > o.dist;
    return path > o.path;
  }
};

bool better(double dist, const std::vector<int>& path, const Label& current) {
  if (dist != current.dist) return dist < current.dist;
  return path < current.path;
}

}  // namespace

std::optional<Route> route(const ContractedGraph& graph, int src, int dst) {
  const std::size_t n = graph.nodes.size();
  if (src < 0 || dst < 0 || static_cast<std::size_t>(src) >= n ||
      static_cast<std::size_t>(dst) >= n)
    throw PreconditionError("route endpoint is not a graph node");

  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<Label> best(n, Label{inf, {}});
  std::vector<char> settled(n, 0);
  std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;
  best[static_cast<std::size_t>(src)] = {0.0, {src}};
  queue.push(best[static_cast<std::size_t>(src)]);

  while (!queue.empty()) {
    Label top = queue.top();
    queue.pop();
    const int u = top.path.back();
    if (settled[static_cast<std::size_t>(u)]) continue;
    settled[static_cast<std::size_t>(u)] = 1;
    if (u == dst) break;
    for (int e : graph.incident[static_cast<std::size_t>(u)]) {
      const int v = graph.other(e, u);
      if (settled[static_cast<std::size_t>(v)]) continue;
      const double nd = top.dist + graph.edges[static_cast<std::size_t>(e)].weight;
      std::vector<int> np = top.path;
      np.push_back(v);
      if (better(nd, np, best[static_cast<std::size_t>(v)])) {
        best[static_cast<std::size_t>(v)] = {nd, np};
        queue.push({nd, std::move(np)});
      }
    }
  }
  if (!settled[static_cast<std::size_t>(dst)]) return std::nullopt;

  Route r;
  r.length = best[static_cast<std::size_t>(dst)].dist;
  r.path = std::move(best[static_cast<std::size_t>(dst)].path);
  for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
    // Cheapest edge between consecutive nodes; parallel links are possible.
    int chosen = -1;
    for (int e : graph.incident[static_cast<std::size_t>(r.path[i])]) {
      if (graph.other(e, r.path[i]) != r.path[i + 1]) continue;
      if (chosen < 0 || graph.edges[static_cast<std::size_t>(e)].weight <
                            graph.edges[static_cast<std::size_t>(chosen)].weight)
        chosen = e;
    }
    const int link = graph.edges[static_cast<std::size_t>(chosen)].link;
    if (link >= 0) r.links.push_back(link);
  }
  return r;
}

std::optional<double> gate_energy(const Layout& layout, const Gate& gate,
                                  const RouterParams& params, const CommContext& ctx,
                                  LinkTraffic* traffic, bool record) {
  const int pa = layout.phys(gate.qubits[0]);
  const int pb = layout.phys(gate.qubits[1]);
  const auto& arch = layout.arch();
  if (arch.core_of(pa) == arch.core_of(pb)) return static_cast<double>(arch.distances()(pa, pb));
  const auto graph = build_contracted_graph(layout, gate, params, ctx, traffic);
  auto r = route(graph, ContractedGraph::source, ContractedGraph::target);
  if (!r) return std::nullopt;
  if (traffic && record)
    for (int l : r->links) traffic->add(l);
  return r->length;
}

std::optional<double> gate_energy(const Layout& layout, const Gate& gate,
                                  const RouterParams& params) {
  return gate_energy(layout, gate, params, comm_context(layout));
}

std::optional<double> total_energy(const Layout& layout, const CircuitDag& dag,
                                   std::span<const GateId> front,
                                   std::span<const GateId> extended, const RouterParams& params,
                                   std::size_t front_denominator) {
  const auto& arch = layout.arch();
  const CommContext ctx = comm_context(layout);
  LinkTraffic traffic(arch.links().size());

  double front_sum = 0.0;
  for (GateId g : front) {
    const auto e = gate_energy(layout, dag.gate(g), params, ctx, &traffic, true);
    if (!e) return std::nullopt;
    front_sum += *e;
  }
  const std::size_t denom = front_denominator ? front_denominator : front.size();
  double energy = denom ? front_sum / static_cast<double>(denom) : 0.0;

  if (!extended.empty()) {
    const double sentinel = 10.0 * arch.num_qubits();
    double ext_sum = 0.0;
    for (GateId g : extended)
      ext_sum += gate_energy(layout, dag.gate(g), params, ctx, &traffic, false).value_or(sentinel);
    energy += params.lookahead_k * ext_sum / static_cast<double>(extended.size());
  }
  return energy;
}

}  // namespace mcroute
