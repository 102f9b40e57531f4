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

#include "greedy_mover.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "mcroute/architecture.hpp"

namespace mcroute::detail {

void GreedyMover::fail(std::string reason) const {
  fail_(std::move(reason));
  throw std::logic_error("GreedyMover fail callback returned");
}

void GreedyMover::advance(const Gate& gate) {
  const int q1 = gate.qubits[0];
  const int q2 = gate.qubits[1];
  if (layout_.core(q1) == layout_.core(q2))
    approach(q1, layout_.phys(q2));
  else
    cross(gate);
}

// Shortest intra-core path from `from` to `to`, both endpoints included.
std::vector<int> GreedyMover::core_path(int from, int to) const {
  std::vector<int> parent(static_cast<std::size_t>(arch_.num_qubits()), -1);
  std::deque<int> open{from};
  parent[static_cast<std::size_t>(from)] = from;
  while (!open.empty()) {
    const int p = open.front();
    open.pop_front();
    if (p == to) break;
    for (int n : arch_.neighbors(p))
      if (parent[static_cast<std::size_t>(n)] < 0) {
        parent[static_cast<std::size_t>(n)] = p;
        open.push_back(n);
      }
  }
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Swaps logical q toward `target` until it is adjacent to it.
void GreedyMover::approach(int q, int target) {
  const auto path = core_path(layout_.phys(q), target);
  for (std::size_t i = 0; i + 2 < path.size(); ++i) commit_(make_swap(path[i], path[i + 1]));
}

// Walks the nearest hole of p's core onto p.
void GreedyMover::vacate(int p) {
  if (layout_.is_free(p)) return;
  int best = -1;
  for (int f : layout_.free_qubits(arch_.core_of(p)))
    if (best < 0 || arch_.distances()(p, f) < arch_.distances()(p, best)) best = f;
  if (best < 0) fail("core " + std::to_string(arch_.core_of(p)) + " has no free qubit");
  const auto path = core_path(best, p);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) commit_(make_swap(path[i], path[i + 1]));
}

// Fewest-link core path from `from` to `to`, ties to the lower core id.
std::vector<int> GreedyMover::core_route(int from, int to) const {
  const int c = arch_.num_cores();
  std::vector<int> parent(static_cast<std::size_t>(c), -1);
  std::deque<int> open{from};
  parent[static_cast<std::size_t>(from)] = from;
  while (!open.empty()) {
    const int core = open.front();
    open.pop_front();
    if (core == to) break;
    for (int n : neighbor_cores(core)) {
      if (parent[static_cast<std::size_t>(n)] >= 0) continue;
      parent[static_cast<std::size_t>(n)] = core;
      open.push_back(n);
    }
  }
  if (parent[static_cast<std::size_t>(to)] < 0) return {};
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> GreedyMover::neighbor_cores(int core) const {
  std::vector<int> out;
  for (const auto& link : arch_.links()) {
    if (arch_.core_of(link.a) == core) out.push_back(arch_.core_of(link.b));
    if (arch_.core_of(link.b) == core) out.push_back(arch_.core_of(link.a));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Teleports q into the adjacent core `to`, which must have >= 2 free.
void GreedyMover::hop(int q, int to) {
  const int from = layout_.core(q);
  std::vector<std::pair<int, int>> ends;  // (source comm, destination comm)
  int best = DistanceTable::unreachable;
  for (const auto& link : arch_.links()) {
    for (auto [s, t] : {std::pair{link.a, link.b}, std::pair{link.b, link.a}}) {
      if (arch_.core_of(s) != from || arch_.core_of(t) != to) continue;
      const int d = arch_.distances()(layout_.phys(q), s);
      if (d < best) ends.clear(), best = d;
      if (d == best) ends.emplace_back(s, t);
    }
  }
  if (ends.empty()) fail("no link between cores " + std::to_string(from) + " and " +
                         std::to_string(to));
  std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
  const auto [s, t] = ends[pick(rng_)];
  vacate(t);
  vacate(s);
  approach(q, s);
  if (!teleport_feasible(layout_, q, s, t))
    fail("teleport of logical " + std::to_string(q) + " into core " + std::to_string(to) +
         " not feasible");
  commit_(TeledataOp{q, layout_.phys(q), s, t});
}

// Makes room in `core` by pushing occupants outward toward the nearest core
// with >= 2 free, never moving the logical qubits in `keep`.
bool GreedyMover::evict_into_neighbours(int core, std::array<int, 2> keep) {
  const int c = arch_.num_cores();
  std::vector<int> parent(static_cast<std::size_t>(c), -1);
  std::deque<int> open{core};
  parent[static_cast<std::size_t>(core)] = core;
  int sink = -1;
  while (!open.empty() && sink < 0) {
    const int at = open.front();
    open.pop_front();
    for (int n : neighbor_cores(at)) {
      if (parent[static_cast<std::size_t>(n)] >= 0) continue;
      parent[static_cast<std::size_t>(n)] = at;
      if (layout_.free_count(n) >= 2) {
        sink = n;
        break;
      }
      open.push_back(n);
    }
  }
  if (sink < 0) return false;
  // Shift one occupant per hop, starting next to the sink.
  for (int to = sink; to != core; to = parent[static_cast<std::size_t>(to)]) {
    const int from = parent[static_cast<std::size_t>(to)];
    int mover = -1;
    int best = DistanceTable::unreachable;
    for (int p : arch_.core(from).qubits) {
      const int q = layout_.occupant(p);
      if (q == kNoQubit || q == keep[0] || q == keep[1]) continue;
      for (int s : arch_.core(from).comm_qubits)
        if (arch_.distances()(p, s) < best) best = arch_.distances()(p, s), mover = q;
    }
    if (mover < 0) return false;
    hop(mover, to);
  }
  return true;
}

bool GreedyMover::telegate_across(const Gate& gate) {
  const int q1 = gate.qubits[0];
  const int q2 = gate.qubits[1];
  const auto& d = arch_.distances();
  const Link* best = nullptr;
  int best_cost = DistanceTable::unreachable;
  for (const auto& link : arch_.links()) {
    const auto [a, b] = arch_.core_of(link.a) == layout_.core(q1) ? std::pair{link.a, link.b}
                                                                   : std::pair{link.b, link.a};
    if (arch_.core_of(a) != layout_.core(q1) || arch_.core_of(b) != layout_.core(q2)) continue;
    const int cost = d(layout_.phys(q1), a) + d(layout_.phys(q2), b);
    if (cost < best_cost) best = &link, best_cost = cost;
  }
  if (!best) return false;
  for (int c : {best->a, best->b}) vacate(c);
  for (int c : {best->a, best->b}) {
    const int q = arch_.core_of(c) == layout_.core(q1) ? q1 : q2;
    approach(q, c);
  }
  if (!telegate_feasible(layout_, gate, *best)) return false;
  commit_(make_telegate(layout_, gate, *best));
  return true;
}

// Every hop shortens the core distance between the operands, and an
// eviction always enables a hop, so this terminates.
void GreedyMover::cross(const Gate& gate) {
  const int q1 = gate.qubits[0];
  const int q2 = gate.qubits[1];
  const auto path = core_route(layout_.core(q1), layout_.core(q2));
  if (path.size() < 2) fail("cores of logical " + std::to_string(q1) + " and " +
                            std::to_string(q2) + " are not connected");
  if (layout_.free_count(path[1]) >= 2) return hop(q1, path[1]);
  const int back = path[path.size() - 2];
  if (layout_.free_count(back) >= 2) return hop(q2, back);
  if (allow_telegate_ && path.size() == 2 && telegate_across(gate)) return;
  if (!evict_into_neighbours(path[1], {q1, q2}))
    fail("no core near " + std::to_string(path[1]) + " can take a qubit between logical " +
         std::to_string(q1) + " and " + std::to_string(q2));
}

}  // namespace mcroute::detail
