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

#include "mcroute/architecture.hpp"
#include "mcroute/circuit.hpp"
#include "mcroute/energy.hpp"
#include "mcroute/layout.hpp"

namespace mcroute {

/// Starting assignment: the qubit pairs of the first front layer are packed
/// into common cores (gates in id order, core with the most spare room,
/// seeded tie-break), the remaining logical qubits go round-robin into cores
/// with spare room, and positions inside a core are a seeded shuffle. Every
/// core keeps at least one free qubit; InfeasibleInstanceError otherwise.
Layout initial_layout(const Architecture& arch, const CircuitDag& dag, std::uint64_t seed);

/// Forward run from initial_layout, backward run on the reversed circuit
/// from the forward result; returns the backward run's final layout.
Layout optimize_initial(const Architecture& arch, const CircuitDag& dag, std::uint64_t seed,
                        const RouterParams& params);

}  // namespace mcroute
