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

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "mcroute/circuit.hpp"
#include "mcroute/energy.hpp"
#include "mcroute/errors.hpp"
#include "mcroute/layout.hpp"
#include "mcroute/schedule.hpp"

namespace mcroute {

struct RoutingResult {
  Schedule schedule;
  Layout final_layout;
};

/// Mutable state of one routing run.
struct RouterState {
  RouterState(CircuitDag dag_in, Layout layout_in, std::uint64_t seed);

  CircuitDag dag;
  Layout layout;
  Schedule schedule;
  int stall = 0;  // movement ops since the last gate execution
  std::mt19937_64 rng;
};

/// Candidate movements for a blocked front:
///  (a) swaps on every coupling edge at a front-gate qubit;
///  (b) for each cross-core front gate, swaps that bring the nearest free
///      qubit one step closer to each occupied comm qubit on its route;
///  (c) feasible teledata of a front-gate qubit over a link on its route;
///  (d) feasible telegates for cross-core front gates.
/// Sorted (swaps, teledata, telegates; then by ids) and deduplicated.
std::vector<CandidateOp> obtain_candidate_ops(const RouterState& state,
                                              const RouterParams& params);

struct ScoredCandidate {
  CandidateOp op;
  std::optional<double> energy;  // nullopt: a front gate became unroutable
  double score = 0.0;            // energy * max usage over touched qubits
};

std::vector<ScoredCandidate> score_candidates(const RouterState& state,
                                              std::span<const CandidateOp> candidates,
                                              const RouterParams& params);

/// Uniform random pick among the minimum-score candidates. Throws
/// DeadlockError when no candidate is routable.
CandidateOp score_and_select(RouterState& state, std::span<const CandidateOp> candidates,
                             const RouterParams& params);

/// Full search from `initial`. Throws DeadlockError when more than max_stall
/// movements happen without executing a gate or when nothing can move.
RoutingResult run(CircuitDag dag, const Layout& initial, const RouterParams& params);
/// Same, starting from initial_layout(arch, dag, params.seed).
RoutingResult run(CircuitDag dag, const Architecture& arch, const RouterParams& params);

// Schedule assembly shared by the router, the greedy baseline and the oracle.

Schedule start_schedule(const CircuitDag& dag, const Layout& initial);
/// Executes every gate that is runnable in place (repeatedly, as successors
/// become ready) and records it. Returns how many ran.
int execute_ready_gates(CircuitDag& dag, const Layout& layout, Schedule& schedule);
/// Records a movement already applied to `layout`; a telegate also executes
/// its gate in `dag`.
void record_movement(Schedule& schedule, CircuitDag& dag, const Layout& layout,
                     const CandidateOp& op);
DeadlockInfo deadlock_info(const CircuitDag& dag, const Layout& layout, int stalled,
                           std::string reason);

}  // namespace mcroute
