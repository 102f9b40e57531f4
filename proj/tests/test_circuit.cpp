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

#include <algorithm>
#include <random>
#include <set>

#include "mcroute/benchmarks.hpp"
#include "mcroute/circuit.hpp"
#include "mcroute/errors.hpp"

using namespace mcroute;

namespace {

CircuitDag qasm(std::string_view body) {
  return parse_circuit(body, CircuitFormat::qasm);
}

// Recomputes the front from predecessor lists.
std::set<GateId> front_from_scratch(const CircuitDag& dag) {
  std::set<GateId> f;
  for (const auto& g : dag.gates()) {
    if (dag.executed(g.id)) continue;
    if (std::all_of(g.predecessors.begin(), g.predecessors.end(),
                    [&](GateId p) { return dag.executed(p); }))
      f.insert(g.id);
  }
  return f;
}

const char* kChain = "qreg q[4];\ncx q[0],q[1];\ncx q[1],q[2];\ncx q[0],q[3];\n";

const char* kToffoli =
    "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n"
    "h q[2];\ncx q[1],q[2];\ntdg q[2];\ncx q[0],q[2];\nt q[2];\ncx q[1],q[2];\n"
    "tdg q[2];\ncx q[0],q[2];\nt q[1];\nt q[2];\nh q[2];\ncx q[0],q[1];\nt q[0];\n"
    "tdg q[1];\ncx q[0],q[1];\n";

}  // namespace

TEST_CASE("empty circuit has an empty front") {
  auto dag = qasm("qreg q[4];\n");
  CHECK(dag.num_qubits() == 4);
  CHECK(dag.size() == 0);
  CHECK(dag.front().empty());
  CHECK(dag.done());
}

TEST_CASE("three-gate chain") {
  auto dag = qasm(kChain);
  REQUIRE(dag.size() == 3);
  CHECK(dag.front() == std::set<GateId>{0});
  CHECK(dag.gate(1).predecessors == std::vector<GateId>{0});
  CHECK(dag.gate(2).predecessors == std::vector<GateId>{0});

  SUBCASE("extended set is BFS order") {
    CHECK(dag.extended_set(0).empty());
    CHECK(dag.extended_set(1) == std::vector<GateId>{1});
    CHECK(dag.extended_set(20) == std::vector<GateId>{1, 2});
  }
  SUBCASE("executing gate0 enables both successors") {
    CHECK(dag.execute(0) == std::vector<GateId>{1, 2});
    CHECK(dag.front() == std::set<GateId>{1, 2});
    CHECK(dag.execute(2).empty());
    CHECK(dag.front() == std::set<GateId>{1});
    dag.execute(1);
    CHECK(dag.front().empty());
    CHECK(dag.done());
  }
  SUBCASE("executing outside the front is rejected") {
    CHECK_THROWS_AS(dag.execute(1), PreconditionError);
  }
  SUBCASE("reverse") {
    auto r = reverse(dag);
    CHECK(r.front() == std::set<GateId>{1, 2});
    auto rr = reverse(r);
    CHECK(rr.front() == dag.front());
    for (const auto& g : dag.gates()) {
      CHECK(rr.gate(g.id).predecessors == g.predecessors);
      CHECK(rr.gate(g.id).successors == g.successors);
      CHECK(r.gate(g.id).qubits == g.qubits);
    }
  }
}

TEST_CASE("reverse of an empty circuit") {
  auto r = reverse(CircuitDag(3));
  CHECK(r.size() == 0);
  CHECK(r.front().empty());
}

TEST_CASE("decomposed Toffoli") {
  auto dag = qasm(kToffoli);
  REQUIRE(dag.size() == 6);
  CHECK(dag.front() == std::set<GateId>{0});
  const std::vector<std::vector<GateId>> preds{{}, {0}, {0, 1}, {1, 2}, {2, 3}, {4}};
  for (GateId g = 0; g < 6; ++g) CHECK(dag.gate(g).predecessors == preds[static_cast<std::size_t>(g)]);
  CHECK(dag.prologue().size() == 1);
  CHECK(dag.prologue()[0] == Annotation{"h", 2});
  // tdg q2 follows the first CX.
  CHECK(dag.gate(0).trailing == std::vector<Annotation>{{"tdg", 2}});
  CHECK(dag.gate(3).trailing == std::vector<Annotation>{{"t", 2}, {"h", 2}});
}

TEST_CASE("QASM subset") {
  SUBCASE("creg, measure, barrier and gate definitions are skipped") {
    auto dag = qasm(
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n"
        "gate foo a, b { cx a, b; }\n"
        "qreg q[2];\ncreg c[2];\nrz(pi/4) q[0];\ncz q[0],q[1];\nbarrier q;\n"
        "measure q[0] -> c[0];\n");
    CHECK(dag.size() == 1);
    CHECK(dag.gate(0).kind == "cz");
    CHECK(dag.prologue() == std::vector<Annotation>{{"rz", 0}});
  }
  SUBCASE("multiple registers are concatenated") {
    auto dag = qasm("qreg a[2];\nqreg b[2];\ncx a[1],b[0];\n");
    CHECK(dag.num_qubits() == 4);
    CHECK(dag.gate(0).qubits == std::array<int, 2>{1, 2});
  }
  SUBCASE("three-qubit gates are unsupported") {
    try {
      qasm("qreg q[3];\nccx q[0],q[1],q[2];\n");
      FAIL("expected UnsupportedGateError");
    } catch (const UnsupportedGateError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("errors carry line and column") {
    try {
      qasm("qreg q[2];\n\ncx q[0],q[5];\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 9);
    }
    CHECK_THROWS_AS(qasm("qreg q[2];\ncx q[0] q[1];\n"), ParseError);
    CHECK_THROWS_AS(qasm("qreg q[2];\ncx q[0],q[0];\n"), ParseError);
    CHECK_THROWS_AS(qasm("qreg q[2];\ncx r[0],q[1];\n"), ParseError);
  }
}

TEST_CASE("gate-list JSON round trip") {
  auto dag = qasm(kToffoli);
  auto back = parse_circuit(to_gate_list_json(dag), CircuitFormat::gate_list);
  REQUIRE(back.size() == dag.size());
  CHECK(back.prologue() == dag.prologue());
  for (const auto& g : dag.gates()) {
    CHECK(back.gate(g.id).qubits == g.qubits);
    CHECK(back.gate(g.id).predecessors == g.predecessors);
    CHECK(back.gate(g.id).trailing == g.trailing);
  }
  CHECK_THROWS_AS(parse_circuit("{\"num_qubits\": 3, \"gates\": [{\"kind\": \"ccx\", "
                                "\"qubits\": [0,1,2]}]}",
                                CircuitFormat::gate_list),
                  UnsupportedGateError);
  CHECK_THROWS_AS(parse_circuit("{\"num_qubits\": 3,\n \"gates\": [", CircuitFormat::gate_list),
                  ParseError);
}

TEST_CASE("front matches recomputation during random execution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto dag = bench::random_circuit(2 + static_cast<int>(rng() % 9), 40, rng());
    std::size_t steps = 0;
    while (!dag.done()) {
      CHECK(dag.front() == front_from_scratch(dag));
      for (GateId h : dag.extended_set(10)) {
        CHECK_FALSE(dag.in_front(h));
        CHECK_FALSE(dag.executed(h));
      }
      std::vector<GateId> f(dag.front().begin(), dag.front().end());
      dag.execute(f[rng() % f.size()]);
      ++steps;
    }
    CHECK(steps == dag.size());
    CHECK(dag.num_executed() == dag.size());
  }
}

TEST_CASE("dependencies only join gates sharing a qubit") {
  auto dag = bench::qft(6);
  for (const auto& g : dag.gates())
    for (GateId p : g.predecessors) {
      const auto& q = dag.gate(p).qubits;
      CHECK(p < g.id);
      CHECK((q[0] == g.qubits[0] || q[0] == g.qubits[1] || q[1] == g.qubits[0] ||
             q[1] == g.qubits[1]));
    }
}
