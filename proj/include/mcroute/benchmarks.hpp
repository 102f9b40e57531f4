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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcroute/circuit.hpp"

namespace mcroute::bench {

// Circuit families decomposed to CX/CZ plus single-qubit gates. Controlled
// phases use two CX; Toffolis use the six-CX decomposition.

CircuitDag ghz(int n);
/// H on every qubit, then CZ on a ring plus seeded random chords.
CircuitDag graph_state(int n, std::uint64_t seed = 0);
CircuitDag qft(int n);
/// Ripple-carry adder of two (n-2)/2-bit registers with carry in/out.
CircuitDag cuccaro_adder(int n);
/// QFT-based adder of two n/2-qubit registers.
CircuitDag draper_adder(int n);
/// One layer of ZZ interactions over all pairs, then mixers.
CircuitDag qaoa(int n);
/// Amplitude-estimation shape: controlled powers onto the last qubit, then
/// an inverse QFT over the counting qubits.
CircuitDag amplitude_estimation(int n);
/// ZZ feature map over all pairs followed by two rounds of full-entanglement
/// CX layers.
CircuitDag qnn(int n);
CircuitDag random_circuit(int n, int two_qubit_gates, std::uint64_t seed);

/// Builds a circuit from a spec such as `ghz:26` or `random:26:300:7`
/// (qubits, gates, seed). Throws PreconditionError on an unknown family.
CircuitDag make(std::string_view spec);

/// Family names accepted by make().
std::vector<std::string> families();

/// exp(mean(log(1 + x))) - 1, so zero counts do not collapse the mean.
double shifted_geomean(std::span<const double> values);

}  // namespace mcroute::bench
