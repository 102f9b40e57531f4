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

#include <compare>
#include <cstddef>

#include "mcroute/architecture.hpp"
#include "mcroute/circuit.hpp"
#include "mcroute/layout.hpp"
#include "mcroute/schedule.hpp"

namespace mcroute {

/// Lexicographic cost: inter-core operations first, then swaps.
struct OracleCost {
  int intercore = 0;
  int swaps = 0;
  auto operator<=>(const OracleCost&) const = default;
};

struct OracleLimits {
  int max_ops = 32;                 // prune sequences longer than this
  double time_budget_seconds = 60;  // wall-clock cap
  std::size_t max_states = 20'000'000;
};

struct OracleResult {
  bool solved = false;
  OracleCost cost;         // optimum when solved
  OracleCost lower_bound;  // cost of the last settled state when not solved
  Schedule witness;
  std::size_t states = 0;
};

/// Exhaustive search for the cheapest op sequence that executes every gate
/// from `initial`, over states (layout, executed set). Moves are swaps
/// (cost (0,1)) and feasible teledata/telegates (cost (1,0)); executable
/// gates run for free as soon as they are ready. States are settled in
/// increasing lexicographic cost, so the first complete state is optimal.
///
/// Meant for desk-sized instances (<= ~10 physical qubits, <= 64 gates).
OracleResult solve_exact(const CircuitDag& dag, const Layout& initial,
                         const OracleLimits& limits = {});

}  // namespace mcroute
