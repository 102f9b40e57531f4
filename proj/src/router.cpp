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

#include "mcroute/router.hpp"

#include <algorithm>
#include <limits>

#include "greedy_mover.hpp"
#include "mcroute/errors.hpp"
#include "mcroute/initial_layout.hpp"
#include "mcroute/log.hpp"

namespace mcroute {

namespace {

constexpr double kTieTolerance = 1e-9;

std::vector<SingleQubitOp> place_singles(const std::vector<Annotation>& anns,
                                         const Layout& layout) {
  std::vector<SingleQubitOp> out;
  out.reserve(anns.size());
  for (const auto& a : anns) out.push_back({a.kind, a.qubit, layout.phys(a.qubit)});
  return out;
}

}  // namespace

RouterState::RouterState(CircuitDag dag_in, Layout layout_in, std::uint64_t seed)
    : dag(std::move(dag_in)), layout(std::move(layout_in)), rng(seed) {}

Schedule start_schedule(const CircuitDag& dag, const Layout& initial) {
  Schedule s;
  s.num_physical = initial.num_physical();
  s.initial_layout.assign(initial.phys_of().begin(), initial.phys_of().end());
  s.prologue = place_singles(dag.prologue(), initial);
  return s;
}

int execute_ready_gates(CircuitDag& dag, const Layout& layout, Schedule& schedule) {
  int ran = 0;
  for (;;) {
    std::vector<GateId> ready;
    for (GateId g : dag.front())
      if (is_gate_executable(layout, dag.gate(g))) ready.push_back(g);
    if (ready.empty()) return ran;
    for (GateId g : ready) {
      const auto& gate = dag.gate(g);
      schedule.ops.emplace_back(LocalGateStep{g, layout.phys(gate.qubits[0]),
                                              layout.phys(gate.qubits[1]),
                                              place_singles(gate.trailing, layout)});
      dag.execute(g);
      ++ran;
    }
  }
}

void record_movement(Schedule& schedule, CircuitDag& dag, const Layout& layout,
                     const CandidateOp& op) {
  if (const auto* s = std::get_if<SwapOp>(&op)) {
    schedule.ops.emplace_back(SwapStep{s->a, s->b});
  } else if (const auto* t = std::get_if<TeledataOp>(&op)) {
    schedule.ops.emplace_back(TeledataStep{t->qubit, t->src_data, t->src_comm, t->dst_comm});
  } else {
    const auto& tg = std::get<TelegateOp>(op);
    schedule.ops.emplace_back(TelegateStep{tg.gate, tg.data_a, tg.data_b, tg.comm_a, tg.comm_b,
                                           place_singles(dag.gate(tg.gate).trailing, layout)});
    dag.execute(tg.gate);
  }
}

DeadlockInfo deadlock_info(const CircuitDag& dag, const Layout& layout, int stalled,
                           std::string reason) {
  DeadlockInfo info;
  info.blocked_gates.assign(dag.front().begin(), dag.front().end());
  for (int c = 0; c < layout.arch().num_cores(); ++c)
    if (layout.free_count(c) < 2) info.full_cores.push_back(c);
  info.layout.assign(layout.phys_of().begin(), layout.phys_of().end());
  info.stalled_ops = stalled;
  info.reason = std::move(reason);
  return info;
}

std::vector<CandidateOp> obtain_candidate_ops(const RouterState& state,
                                              const RouterParams& params) {
  const auto& layout = state.layout;
  const auto& arch = layout.arch();
  const auto& d = arch.distances();
  std::vector<CandidateOp> out;
  auto add_swap = [&](int p, int q) {
    if (!(layout.is_free(p) && layout.is_free(q))) out.emplace_back(make_swap(p, q));
  };

  const CommContext ctx = comm_context(layout);
  LinkTraffic traffic(arch.links().size());
  for (GateId g : state.dag.front()) {
    const auto& gate = state.dag.gate(g);
    for (int q : gate.qubits) {
      const int p = layout.phys(q);
      for (int n : arch.neighbors(p)) add_swap(p, n);
    }
    if (layout.core(gate.qubits[0]) == layout.core(gate.qubits[1])) continue;

    const auto graph = build_contracted_graph(layout, gate, params, ctx, &traffic);
    if (const auto r = route(graph, ContractedGraph::source, ContractedGraph::target)) {
      for (int l : r->links) traffic.add(l);
      for (int node : r->path) {
        if (node < 2) continue;
        const int c = graph.nodes[static_cast<std::size_t>(node)];
        if (layout.is_free(c)) continue;
        const auto nf = nearest_free(layout, c);
        if (!nf.qubit) continue;
        const int f = *nf.qubit;
        for (int n : arch.neighbors(c))
          if (d(n, f) == d(c, f) - 1) add_swap(c, n);
        for (int m : arch.neighbors(f))
          if (d(m, c) == d(f, c) - 1) add_swap(f, m);
      }
      for (int li : r->links) {
        const auto& link = arch.links()[static_cast<std::size_t>(li)];
        for (int q : gate.qubits) {
          for (auto [s, t] : {std::pair{link.a, link.b}, std::pair{link.b, link.a}})
            if (teleport_feasible(layout, q, s, t))
              out.emplace_back(TeledataOp{q, layout.phys(q), s, t});
        }
      }
    }
    for (const auto& link : arch.links())
      if (telegate_feasible(layout, gate, link)) out.emplace_back(make_telegate(layout, gate, link));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ScoredCandidate> score_candidates(const RouterState& state,
                                              std::span<const CandidateOp> candidates,
                                              const RouterParams& params) {
  const std::vector<GateId> front(state.dag.front().begin(), state.dag.front().end());
  const std::vector<GateId> extended = state.dag.extended_set(params.extended_size);
  std::vector<ScoredCandidate> scored;
  scored.reserve(candidates.size());
  for (const auto& op : candidates) {
    Layout after = state.layout;
    apply_operation(after, op);
    std::optional<double> energy;
    if (const auto* tg = std::get_if<TelegateOp>(&op)) {
      std::vector<GateId> rest;
      for (GateId g : front)
        if (g != tg->gate) rest.push_back(g);
      energy = total_energy(after, state.dag, rest, extended, params, front.size());
    } else {
      energy = total_energy(after, state.dag, front, extended, params);
    }
    double max_usage = 1.0;
    for (int p : touched(op)) max_usage = std::max(max_usage, state.layout.usage(p));
    scored.push_back({op, energy, energy ? *energy * max_usage : 0.0});
  }
  return scored;
}

CandidateOp score_and_select(RouterState& state, std::span<const CandidateOp> candidates,
                             const RouterParams& params) {
  const auto scored = score_candidates(state, candidates, params);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : scored)
    if (s.energy) best = std::min(best, s.score);
  if (best == std::numeric_limits<double>::infinity())
    throw DeadlockError(deadlock_info(state.dag, state.layout, state.stall,
                                      "no candidate leaves the front routable"));
  std::vector<std::size_t> ties;
  for (std::size_t i = 0; i < scored.size(); ++i)
    if (scored[i].energy && scored[i].score <= best + kTieTolerance) ties.push_back(i);
  std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
  return scored[ties[pick(state.rng)]].op;
}

namespace {

// Commits one movement: layout, usage, schedule and stall bookkeeping.
void commit_movement(RouterState& st, const CandidateOp& op, const RouterParams& params) {
  apply_operation(st.layout, op);
  const auto t = touched(op);
  st.layout.bump_usage(t, params.decay_delta);
  record_movement(st.schedule, st.dag, st.layout, op);
  log::debug([&] { return "router op " + describe(op); });
  if (std::holds_alternative<TelegateOp>(op)) {
    st.layout.reset_usage();
    st.stall = 0;
  } else {
    ++st.stall;
  }
}

[[noreturn]] void stall_out(const RouterState& st, int max_stall) {
  throw DeadlockError(deadlock_info(st.dag, st.layout, st.stall,
                                    "no gate executed within " + std::to_string(max_stall) +
                                        " movement operations"));
}

// Forces the oldest front gate through with teleport-on-demand moves until
// some gate runs. Shares the stall budget with the heuristic.
void release_valve(RouterState& st, const RouterParams& params, int max_stall) {
  log::debug([&] { return "release valve at " + std::to_string(st.schedule.ops.size()); });
  detail::GreedyMover mover(
      st.layout, st.rng,
      [&](const CandidateOp& op) {
        if (st.stall >= max_stall) stall_out(st, max_stall);
        commit_movement(st, op, params);
      },
      [&](std::string reason) {
        throw DeadlockError(deadlock_info(st.dag, st.layout, st.stall, std::move(reason)));
      },
      true);
  const GateId oldest = *st.dag.front().begin();
  while (!st.dag.executed(oldest)) {
    if (execute_ready_gates(st.dag, st.layout, st.schedule) > 0) {
      st.layout.reset_usage();
      st.stall = 0;
      continue;
    }
    mover.advance(st.dag.gate(oldest));
  }
}

}  // namespace

RoutingResult run(CircuitDag dag, const Layout& initial, const RouterParams& params) {
  params.validate();
  if (dag.num_qubits() != initial.num_logical())
    throw PreconditionError("layout and circuit disagree on the number of logical qubits");
  const auto& arch = initial.arch();
  const int max_stall = params.resolved_max_stall(arch);
  const int release_after = params.resolved_release_after(arch);

  RouterState st(std::move(dag), initial, params.seed);
  st.layout.reset_usage();
  st.schedule = start_schedule(st.dag, st.layout);

  while (!st.dag.done()) {
    if (execute_ready_gates(st.dag, st.layout, st.schedule) > 0) {
      st.layout.reset_usage();
      st.stall = 0;
      continue;
    }
    if (st.stall >= max_stall) stall_out(st, max_stall);
    if (release_after > 0 && st.stall >= release_after) {
      release_valve(st, params, max_stall);
      continue;
    }
    const auto candidates = obtain_candidate_ops(st, params);
    if (candidates.empty())
      throw DeadlockError(deadlock_info(st.dag, st.layout, st.stall, "no candidate operation"));
    commit_movement(st, score_and_select(st, candidates, params), params);
  }
  st.schedule.final_layout.assign(st.layout.phys_of().begin(), st.layout.phys_of().end());
  return RoutingResult{std::move(st.schedule), std::move(st.layout)};
}

RoutingResult run(CircuitDag dag, const Architecture& arch, const RouterParams& params) {
  Layout start = initial_layout(arch, dag, params.seed);
  return run(std::move(dag), start, params);
}

}  // namespace mcroute
