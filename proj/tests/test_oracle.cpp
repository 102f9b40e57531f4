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

#include <doctest.h>

#include <random>

#include "mcroute/benchmarks.hpp"
#include "mcroute/errors.hpp"
#include "mcroute/oracle.hpp"
#include "mcroute/router.hpp"
#include "mcroute/verifier.hpp"
#include "support/energy_fixtures.hpp"
#include "support/oracles.hpp"

using namespace mcroute;

TEST_CASE("trivial instances") {
  const auto arch = fixtures::two_lines();
  SUBCASE("already executable") {
    CircuitDag dag(2);
    dag.add_gate("cx", 0, 1);
    const auto r = solve_exact(dag, Layout(arch, {0, 1}));
    REQUIRE(r.solved);
    CHECK(r.cost == OracleCost{0, 0});
    CHECK(r.witness.counts().local_gates == 1);
  }
  SUBCASE("one swap") {
    CircuitDag dag(2);
    dag.add_gate("cx", 0, 1);
    const auto r = solve_exact(dag, Layout(arch, {0, 2}));
    CHECK(r.cost == OracleCost{0, 1});
  }
  SUBCASE("telegate position") {
    CircuitDag dag(2);
    dag.add_gate("cx", 0, 1);
    const auto r = solve_exact(dag, Layout(arch, {2, 5}));
    CHECK(r.cost == OracleCost{1, 0});
  }
  SUBCASE("far apart: one inter-core op, then the fewest swaps") {
    CircuitDag dag(2);
    dag.add_gate("cx", 0, 1);
    // Every plan walks one qubit two hops to its comm neighbour and then
    // closes a three-hop gap on the far side (or walks both for a telegate).
    const auto r = solve_exact(dag, Layout(arch, {0, 7}));
    CHECK(r.cost == OracleCost{1, 4});
  }
}

TEST_CASE("witnesses are legal and no worse than the router") {
  std::mt19937_64 rng(31);
  const auto arch = load_architecture("grid:2x1,2x2,1");
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto dag = bench::random_circuit(n, 1 + static_cast<int>(rng() % 5), rng());
    const auto start = oracle::random_layout(arch, n, rng, 1);
    const auto r = solve_exact(dag, start, {20, 20.0, 5'000'000});
    REQUIRE(r.solved);
    const auto report = verify(dag, arch, r.witness);
    CHECK_MESSAGE(report.ok(), report.to_string());
    CHECK(r.witness.counts().intercore() == r.cost.intercore);
    CHECK(r.witness.counts().swaps == r.cost.swaps);
    RouterParams params;
    params.seed = rng();
    try {
      const auto routed = run(dag, start, params).schedule.counts();
      CHECK(OracleCost{routed.intercore(), routed.swaps} >= r.cost);
    } catch (const DeadlockError&) {
    }
  }
}

TEST_CASE("limits") {
  const auto arch = fixtures::two_lines();
  CircuitDag dag(2);
  dag.add_gate("cx", 0, 1);
  OracleLimits tight;
  tight.max_ops = 3;
  const auto r = solve_exact(dag, Layout(arch, {0, 7}), tight);
  CHECK_FALSE(r.solved);
  CHECK(r.lower_bound <= OracleCost{1, 4});
  CircuitDag wide(65);
  for (int i = 0; i < 65; ++i) wide.add_gate("cx", i, (i + 1) % 65);
  const auto big = load_architecture("grid:2x1,8x8,1");
  std::vector<int> pos(65);
  for (int i = 0; i < 65; ++i) pos[static_cast<std::size_t>(i)] = i < 60 ? i : i + 4;
  CHECK_THROWS_AS(solve_exact(wide, Layout(big, pos)), PreconditionError);
}
