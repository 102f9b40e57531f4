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

// Total-energy fixtures with expected values worked out from the formula:
// front mean plus k times extended-set mean, each cross-core term being the
// cheapest contracted-graph route (freeing cost d/2 per comm endpoint, a
// penalty per comm endpoint in a full core the route passes through, link
// base weight plus traffic from earlier front routes).

#include <optional>
#include <utility>
#include <vector>

#include "mcroute/architecture.hpp"
#include "mcroute/circuit.hpp"
#include "mcroute/energy.hpp"

namespace fixtures {

// 0-1-2-3 | 4-5-6-7 with comm qubits 3 and 4 linked.
inline mcroute::Architecture two_lines() {
  return mcroute::Architecture({{{0, 1, 2, 3}, {3}, {{0, 1}, {1, 2}, {2, 3}}},
                                {{4, 5, 6, 7}, {4}, {{4, 5}, {5, 6}, {6, 7}}}},
                               {{3, 4}});
}

// 0-1-2 | 3-4-5-6 | 7-8-9; links 2~3 and 6~7.
inline mcroute::Architecture three_lines() {
  return mcroute::Architecture({{{0, 1, 2}, {2}, {{0, 1}, {1, 2}}},
                                {{3, 4, 5, 6}, {3, 6}, {{3, 4}, {4, 5}, {5, 6}}},
                                {{7, 8, 9}, {7}, {{7, 8}, {8, 9}}}},
                               {{2, 3}, {6, 7}});
}

struct EnergyFixture {
  bool three_core;
  std::vector<int> positions;  // logical -> physical
  std::vector<std::pair<int, int>> gates;
  std::vector<int> front;
  std::vector<int> extended;
  double k = 0.5;
  double traffic = 0.5;
  double base = 1.0;
  std::optional<double> capacity_penalty;
  double expected;
};

inline std::vector<EnergyFixture> energy_fixtures() {
  return {
      // direct telegate configuration: 0 + 1 + 0
      {false, {2, 5}, {{0, 1}}, {0}, {}, 0.5, 0.5, 1.0, {}, 1.0},
      // both gate qubits three hops from their comm: 2 + 1 + 2
      {false, {0, 7}, {{0, 1}}, {0}, {}, 0.5, 0.5, 1.0, {}, 5.0},
      // destination comm occupied, hole one hop away: 0 + 1.5 + 2.5
      {false, {2, 7, 4}, {{0, 1}}, {0}, {}, 0.5, 0.5, 1.0, {}, 4.0},
      // destination core full, but it holds the gate qubit so no penalty: 0 + 1 + 2
      {false, {2, 7, 5, 6}, {{0, 1}}, {0}, {}, 0.5, 0.5, 1.0, {}, 3.0},
      // both gate qubits sitting on the comm qubits: 1.5 + 2 + 1.5
      {false, {3, 4}, {{0, 1}}, {0}, {}, 0.5, 0.5, 1.0, {}, 5.0},
      // source comm occupied by a bystander: 1.5 + 1.5 + 0
      {false, {1, 5, 3}, {{0, 1}}, {0}, {}, 0.5, 0.5, 1.0, {}, 3.0},
      // adjacent local pair
      {false, {0, 1}, {{0, 1}}, {0}, {}, 0.5, 0.5, 1.0, {}, 1.0},
      // two local front gates, distances 2 and 3
      {false, {0, 2, 3, 5}, {{0, 1}, {0, 2}}, {0, 1}, {}, 0.5, 0.5, 1.0, {}, 2.5},
      // local front plus three lookahead gates; the cross-core one leaves a
      // full core 0, which is not penalised: 1 + 1 + 0
      {false, {0, 2, 1, 5, 6}, {{0, 1}, {0, 2}, {2, 3}, {3, 4}}, {0}, {1, 2, 3}, 0.5, 0.5, 1.0, {},
       2.0 + 0.5 * (1.0 + 2.0 + 1.0) / 3.0},
      // second front route pays traffic on the shared link: (1 + 3.5) / 2
      {false, {2, 5, 1, 6}, {{0, 1}, {2, 3}}, {0, 1}, {}, 0.5, 0.5, 1.0, {}, 2.25},
      // lookahead gate also sees the front's traffic: 1 + 0.5 * 3.5
      {false, {2, 5, 1, 6}, {{0, 1}, {2, 3}}, {0}, {1}, 0.5, 0.5, 1.0, {}, 2.75},
      // same with k = 1 and traffic 2: 1 + 5
      {false, {2, 5, 1, 6}, {{0, 1}, {2, 3}}, {0}, {1}, 1.0, 2.0, 1.0, {}, 6.0},
      // heavier link base weight: 2 + 3 + 2
      {false, {0, 7}, {{0, 1}}, {0}, {}, 0.5, 0.5, 3.0, {}, 7.0},
      // full middle core, explicit penalty 2:
      // (1 + 3.5) + (3 + 3.5 + 2) + (1 + 2)
      {true, {1, 8, 3, 4, 5}, {{0, 1}}, {0}, {}, 0.5, 0.5, 1.0, 2.0, 16.0},
      // same with the default penalty 10: 12.5 + 24.5 + 11
      {true, {1, 8, 3, 4, 5}, {{0, 1}}, {0}, {}, 0.5, 0.5, 1.0, {}, 48.0},
      // through the middle core: 0 + 1 + 3 + 1 + 0
      {true, {1, 8}, {{0, 1}}, {0}, {}, 0.5, 0.5, 1.0, {}, 5.0},
      // outer qubits two hops out: 1 + 1 + 3 + 1 + 1
      {true, {0, 9, 4}, {{0, 1}}, {0}, {}, 0.5, 0.5, 1.0, {}, 7.0},
      {true, {1, 8, 4, 5}, {{0, 1}, {2, 3}}, {0}, {1}, 0.5, 0.5, 1.0, {}, 5.5},
      {true, {1, 4, 8}, {{0, 1}, {1, 2}, {0, 2}}, {0, 1}, {2}, 0.5, 0.5, 1.0, {}, 4.5},
      {true, {0, 3, 6, 9}, {{0, 3}, {1, 2}}, {0}, {1}, 0.25, 0.5, 1.0, {}, 9.75},
      {true, {1, 4, 5, 8}, {{0, 3}, {1, 2}, {0, 1}}, {0, 1}, {2}, 0.5, 1.0, 1.0, {}, 4.0},
  };
}

inline mcroute::CircuitDag fixture_dag(const EnergyFixture& f) {
  mcroute::CircuitDag dag(static_cast<int>(f.positions.size()));
  for (const auto& [a, b] : f.gates) dag.add_gate("cx", a, b);
  return dag;
}

inline mcroute::RouterParams fixture_params(const EnergyFixture& f) {
  mcroute::RouterParams p;
  p.lookahead_k = f.k;
  p.traffic_coeff = f.traffic;
  p.teleport_base_weight = f.base;
  p.capacity_penalty = f.capacity_penalty;
  return p;
}

}  // namespace fixtures
