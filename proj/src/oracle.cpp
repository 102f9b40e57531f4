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

#include "mcroute/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <queue>
#include <string>
#include <unordered_map>

#include "mcroute/errors.hpp"
#include "mcroute/router.hpp"

namespace mcroute {

namespace {

using Mask = std::uint64_t;

struct Node {
  std::vector<int> phys_of;
  Mask executed = 0;
  OracleCost cost;
  int parent = -1;
  CandidateOp via;
};

struct QueueEntry {
  OracleCost cost;
  int node;
  bool operator>(const QueueEntry& o) const {
    if (cost != o.cost) return cost > o.cost;
    return node > o.node;
  }
};

std::string key_of(const std::vector<int>& phys_of, Mask executed) {
  std::string key(reinterpret_cast<const char*>(&executed), sizeof executed);
  for (int p : phys_of) key.push_back(static_cast<char>(p));
  return key;
}

bool ready(const CircuitDag& dag, Mask executed, GateId g) {
  if (executed >> g & 1U) return false;
  for (GateId p : dag.gate(g).predecessors)
    if (!(executed >> p & 1U)) return false;
  return true;
}

Mask run_ready(const CircuitDag& dag, const Layout& layout, Mask executed) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& gate : dag.gates())
      if (ready(dag, executed, gate.id) && is_gate_executable(layout, gate)) {
        executed |= Mask{1} << gate.id;
        changed = true;
      }
  }
  return executed;
}

}  // namespace

OracleResult solve_exact(const CircuitDag& dag_in, const Layout& initial,
                         const OracleLimits& limits) {
  if (dag_in.size() > 64) throw PreconditionError("oracle supports at most 64 gates");
  if (initial.num_physical() > 127) throw PreconditionError("oracle supports at most 127 qubits");
  CircuitDag dag = dag_in;
  dag.reset();
  const auto& arch = initial.arch();
  const Mask all = dag.size() == 64 ? ~Mask{0} : (Mask{1} << dag.size()) - 1;
  const auto started = std::chrono::steady_clock::now();

  std::vector<Node> nodes;
  std::unordered_map<std::string, int> index;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;

  auto offer = [&](std::vector<int> phys_of, Mask executed, OracleCost cost, int parent,
                   const CandidateOp& via) {
    if (cost.intercore + cost.swaps > limits.max_ops) return;
    auto key = key_of(phys_of, executed);
    auto it = index.find(key);
    if (it != index.end()) {
      Node& existing = nodes[static_cast<std::size_t>(it->second)];
      if (!(cost < existing.cost)) return;
      existing.cost = cost;
      existing.parent = parent;
      existing.via = via;
      queue.push({cost, it->second});
      return;
    }
    const int id = static_cast<int>(nodes.size());
    nodes.push_back({std::move(phys_of), executed, cost, parent, via});
    index.emplace(std::move(key), id);
    queue.push({cost, id});
  };

  {
    const Mask start = run_ready(dag, initial, 0);
    offer({initial.phys_of().begin(), initial.phys_of().end()}, start, {}, -1, SwapOp{});
  }

  OracleResult result;
  int goal = -1;
  std::size_t pops = 0;
  while (!queue.empty()) {
    const auto [cost, id] = queue.top();
    queue.pop();
    if (nodes[static_cast<std::size_t>(id)].cost != cost) continue;  // stale entry
    result.lower_bound = cost;
    if (nodes[static_cast<std::size_t>(id)].executed == all) {
      goal = id;
      break;
    }
    if ((++pops & 1023U) == 0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      if (elapsed > limits.time_budget_seconds || nodes.size() > limits.max_states) break;
    }

    const Node node = nodes[static_cast<std::size_t>(id)];
    const Layout layout(arch, node.phys_of);

    auto expand = [&](const CandidateOp& op, OracleCost next) {
      Layout after = layout;
      apply_operation(after, op);
      Mask executed = node.executed;
      if (const auto* tg = std::get_if<TelegateOp>(&op)) executed |= Mask{1} << tg->gate;
      executed = run_ready(dag, after, executed);
      offer({after.phys_of().begin(), after.phys_of().end()}, executed, next, id, op);
    };

    for (const auto& core : arch.cores())
      for (const auto& [a, b] : core.edges)
        if (!(layout.is_free(a) && layout.is_free(b)))
          expand(make_swap(a, b), {cost.intercore, cost.swaps + 1});
    for (int q = 0; q < layout.num_logical(); ++q)
      for (const auto& link : arch.links())
        for (auto [s, t] : {std::pair{link.a, link.b}, std::pair{link.b, link.a}})
          if (teleport_feasible(layout, q, s, t))
            expand(TeledataOp{q, layout.phys(q), s, t}, {cost.intercore + 1, cost.swaps});
    for (const auto& gate : dag.gates()) {
      if (!ready(dag, node.executed, gate.id)) continue;
      for (const auto& link : arch.links())
        if (telegate_feasible(layout, gate, link))
          expand(make_telegate(layout, gate, link), {cost.intercore + 1, cost.swaps});
    }
  }
  result.states = nodes.size();
  if (goal < 0) return result;

  result.solved = true;
  result.cost = nodes[static_cast<std::size_t>(goal)].cost;
  result.lower_bound = result.cost;

  std::vector<CandidateOp> ops;
  for (int at = goal; nodes[static_cast<std::size_t>(at)].parent >= 0;
       at = nodes[static_cast<std::size_t>(at)].parent)
    ops.push_back(nodes[static_cast<std::size_t>(at)].via);
  std::reverse(ops.begin(), ops.end());

  Layout layout = initial;
  Schedule witness = start_schedule(dag, layout);
  execute_ready_gates(dag, layout, witness);
  for (const auto& op : ops) {
    apply_operation(layout, op);
    record_movement(witness, dag, layout, op);
    execute_ready_gates(dag, layout, witness);
  }
  witness.final_layout.assign(layout.phys_of().begin(), layout.phys_of().end());
  result.witness = std::move(witness);
  return result;
}

}  // namespace mcroute
