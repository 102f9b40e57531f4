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

#include "mcroute/circuit.hpp"
#include "mcroute/layout.hpp"
#include "mcroute/router.hpp"

namespace mcroute {

/// Teleport-on-demand router without lookahead. Front gates are handled one
/// at a time in id order: local gates by swapping along a shortest path,
/// cross-core gates by teleporting one operand a core at a time along a
/// fewest-link core path, clearing communication qubits with nearest-hole
/// swaps first. Never uses telegates.
///
/// Throws DeadlockError when no progress is possible or after `max_stall`
/// movement ops without a gate (default 10 * physical qubits).
RoutingResult run_greedy(CircuitDag dag, const Layout& initial, std::uint64_t seed,
                         std::optional<int> max_stall = std::nullopt);

}  // namespace mcroute
