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

#include "mcroute/benchmarks.hpp"
#include "mcroute/router.hpp"
#include "mcroute/schedule.hpp"
#include "support/energy_fixtures.hpp"

using namespace mcroute;

namespace {

Schedule with_ops(std::vector<CompiledOp> ops) {
  Schedule s;
  s.num_physical = 8;
  s.ops = std::move(ops);
  return s;
}

}  // namespace

TEST_CASE("depth") {
  CHECK(compute_depth(with_ops({})) == 0);
  CHECK(compute_depth(with_ops({LocalGateStep{0, 0, 1, {}}, LocalGateStep{1, 2, 3, {}}})) == 1);
  CHECK(compute_depth(with_ops({LocalGateStep{0, 0, 1, {}}, LocalGateStep{1, 1, 2, {}}})) == 2);
  CHECK(compute_depth(with_ops({SwapStep{0, 1}, LocalGateStep{0, 1, 2, {}}})) == 2);
  // teledata touches source data, source comm and destination comm
  CHECK(compute_depth(with_ops({TeledataStep{0, 2, 3, 4}, LocalGateStep{1, 4, 5, {}},
                                LocalGateStep{2, 0, 1, {}}})) == 2);
  CHECK(compute_depth(with_ops({TelegateStep{0, 2, 5, 3, 4, {}}, SwapStep{5, 6}})) == 2);
  Durations slow;
  slow.teledata = 3;
  CHECK(compute_depth(with_ops({TeledataStep{0, 2, 3, 4}, LocalGateStep{1, 4, 5, {}}}), slow) == 4);
}

TEST_CASE("counts are tallied from the op stream") {
  const auto s = with_ops({SwapStep{0, 1}, SwapStep{1, 2}, TeledataStep{0, 2, 3, 4},
                           TelegateStep{0, 2, 5, 3, 4, {}}, LocalGateStep{1, 0, 1, {}}});
  CHECK(s.counts() == OpCounts{2, 1, 1, 1});
  CHECK(s.counts().intercore() == 2);
}

TEST_CASE("empty schedule JSON") {
  const auto text = emit(with_ops({}), EmitFormat::json);
  CHECK(text.find("\"swaps\": 0") != std::string::npos);
  CHECK(text.find("\"depth\": 0") != std::string::npos);
  CHECK(schedule_from_json(text) == with_ops({}));
}

TEST_CASE("JSON round trip of a routed schedule") {
  const auto arch = load_architecture("grid:2x2,3x3,1");
  auto dag = bench::qft(10);
  RouterParams params;
  params.seed = 2;
  const auto r = run(dag, arch, params);
  const auto text = emit(r.schedule, EmitFormat::json);
  const auto back = schedule_from_json(text);
  CHECK(back == r.schedule);
  CHECK(emit(back, EmitFormat::json) == text);
}

TEST_CASE("annotated text spells out the teleport protocols") {
  const auto s = with_ops({TeledataStep{0, 2, 3, 4}, TelegateStep{1, 2, 5, 3, 4, {}}});
  const auto text = emit(s, EmitFormat::annotated_text);
  for (const char* phase : {"entangle", "measure", "classical", "correct"}) CHECK(text.find(phase) != std::string::npos);
  CHECK(text.find("teledata") != std::string::npos);
  CHECK(text.find("telegate") != std::string::npos);
}

TEST_CASE("CSV summary") {
  // the swap and the teleport share p2, so they occupy two layers
  const auto s = with_ops({SwapStep{1, 2}, TeledataStep{0, 2, 3, 4}});
  CHECK(csv_header() == "circuit,arch,seed,swaps,teledata,telegate,intercore_total,depth,runtime_ms\n");
  CHECK(emit(s, EmitFormat::csv_summary, {"ghz:8", "grid:2x1,2x2,1", 7, 1.5}) ==
        "ghz:8,\"grid:2x1,2x2,1\",7,1,1,0,1,2,1.500\n");
}

TEST_CASE("depth is invariant under relabelling logical qubits") {
  auto s = with_ops({SwapStep{0, 1}, TeledataStep{0, 2, 3, 4}, LocalGateStep{0, 4, 5, {}}});
  auto t = s;
  std::get<TeledataStep>(t.ops[1]).qubit = 7;
  CHECK(compute_depth(s) == compute_depth(t));
}

TEST_CASE("malformed schedule JSON is rejected") {
  CHECK_THROWS(schedule_from_json("{"));
  CHECK_THROWS(schedule_from_json("{\"ops\": [{\"type\": \"warp\"}]}"));
}
