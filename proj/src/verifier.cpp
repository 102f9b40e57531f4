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

#include "mcroute/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace mcroute {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::malformed: return "malformed";
    case ViolationKind::adjacency: return "adjacency";
    case ViolationKind::ordering: return "ordering";
    case ViolationKind::position: return "position";
    case ViolationKind::occupancy: return "occupancy";
    case ViolationKind::capacity: return "capacity";
    case ViolationKind::incomplete: return "incomplete";
    case ViolationKind::final_layout: return "final-layout";
  }
  return "unknown";
}

std::string VerificationReport::to_string() const {
  std::ostringstream out;
  for (const auto& v : violations)
    out << "op " << v.seq << ": " << mcroute::to_string(v.kind) << ": " << v.detail << "\n";
  return out.str();
}

namespace {

class Replay {
 public:
  Replay(const CircuitDag& dag, const Architecture& arch, VerificationReport& report)
      : dag_(dag), arch_(arch), report_(report), executed_(dag.size(), 0) {
    for (const auto& core : arch.cores())
      for (const auto& [a, b] : core.edges) edges_.insert(std::minmax(a, b));
    for (const auto& l : arch.links()) links_.insert(std::minmax(l.a, l.b));
  }

  bool load(const Schedule& s) {
    const int n = arch_.num_qubits();
    if (s.num_physical != n)
      flag(0, ViolationKind::malformed, "schedule has " + std::to_string(s.num_physical) +
                                            " physical qubits, device has " + std::to_string(n));
    if (static_cast<int>(s.initial_layout.size()) != dag_.num_qubits()) {
      flag(0, ViolationKind::malformed, "initial layout size differs from circuit width");
      return false;
    }
    at_.assign(static_cast<std::size_t>(n), -1);
    pos_ = s.initial_layout;
    for (std::size_t q = 0; q < pos_.size(); ++q) {
      const int p = pos_[q];
      if (!valid(p)) {
        flag(0, ViolationKind::malformed, "logical " + std::to_string(q) + " placed off-device");
        return false;
      }
      if (at_[static_cast<std::size_t>(p)] != -1) {
        flag(0, ViolationKind::occupancy, "initial layout places two qubits on p" + std::to_string(p));
        return false;
      }
      at_[static_cast<std::size_t>(p)] = static_cast<int>(q);
    }
    check_singles(0, s.prologue);
    check_capacity(0);
    return true;
  }

  void step(std::size_t seq, const CompiledOp& op) {
    if (const auto* g = std::get_if<LocalGateStep>(&op)) {
      if (!gate_ready(seq, g->gate)) return;
      const auto& gate = dag_.gate(g->gate);
      check_positions(seq, gate, g->p1, g->p2);
      if (!coupled(g->p1, g->p2))
        flag(seq, ViolationKind::adjacency, "gate " + std::to_string(g->gate) + " on uncoupled p" +
                                                std::to_string(g->p1) + ", p" + std::to_string(g->p2));
      check_singles(seq, g->after);
      executed_[static_cast<std::size_t>(g->gate)] = 1;
    } else if (const auto* s = std::get_if<SwapStep>(&op)) {
      if (!valid(s->p1) || !valid(s->p2)) {
        flag(seq, ViolationKind::malformed, "swap endpoint off-device");
        return;
      }
      if (!coupled(s->p1, s->p2))
        flag(seq, ViolationKind::adjacency,
             "swap on uncoupled p" + std::to_string(s->p1) + ", p" + std::to_string(s->p2));
      if (at(s->p1) < 0 && at(s->p2) < 0)
        flag(seq, ViolationKind::occupancy, "swap of two free qubits");
      exchange(s->p1, s->p2);
    } else if (const auto* t = std::get_if<TeledataStep>(&op)) {
      teledata(seq, *t);
    } else {
      telegate(seq, std::get<TelegateStep>(op));
    }
    check_capacity(seq);
  }

  void finish(std::size_t seq, const Schedule& s) {
    std::size_t missing = 0;
    for (char e : executed_) missing += e == 0;
    if (missing)
      flag(seq, ViolationKind::incomplete, std::to_string(missing) + " gates never executed");
    if (s.final_layout != pos_) flag(seq, ViolationKind::final_layout, "replayed layout differs");
  }

 private:
  bool valid(int p) const { return p >= 0 && p < arch_.num_qubits(); }
  int at(int p) const { return at_[static_cast<std::size_t>(p)]; }
  bool coupled(int a, int b) const { return edges_.count(std::minmax(a, b)) != 0; }
  bool linked(int a, int b) const { return links_.count(std::minmax(a, b)) != 0; }

  int free_in_core(int c) const {
    int f = 0;
    for (int p : arch_.core(c).qubits) f += at(p) < 0;
    return f;
  }

  void flag(std::size_t seq, ViolationKind kind, std::string detail) {
    report_.violations.push_back({seq, kind, std::move(detail)});
  }

  void exchange(int a, int b) {
    std::swap(at_[static_cast<std::size_t>(a)], at_[static_cast<std::size_t>(b)]);
    if (at(a) >= 0) pos_[static_cast<std::size_t>(at(a))] = a;
    if (at(b) >= 0) pos_[static_cast<std::size_t>(at(b))] = b;
  }

  bool gate_ready(std::size_t seq, GateId g) {
    if (g < 0 || static_cast<std::size_t>(g) >= dag_.size()) {
      flag(seq, ViolationKind::malformed, "unknown gate " + std::to_string(g));
      return false;
    }
    if (executed_[static_cast<std::size_t>(g)]) {
      flag(seq, ViolationKind::ordering, "gate " + std::to_string(g) + " executed twice");
      return false;
    }
    // Front recomputed from scratch: every unexecuted gate whose
    // predecessors have all run.
    std::vector<GateId> front;
    for (const auto& gate : dag_.gates()) {
      if (executed_[static_cast<std::size_t>(gate.id)]) continue;
      if (std::all_of(gate.predecessors.begin(), gate.predecessors.end(),
                      [&](GateId p) { return executed_[static_cast<std::size_t>(p)] != 0; }))
        front.push_back(gate.id);
    }
    if (std::find(front.begin(), front.end(), g) == front.end())
      flag(seq, ViolationKind::ordering,
           "gate " + std::to_string(g) + " executed before its dependencies");
    return true;
  }

  void check_positions(std::size_t seq, const Gate& gate, int p1, int p2) {
    if (pos_[static_cast<std::size_t>(gate.qubits[0])] != p1 ||
        pos_[static_cast<std::size_t>(gate.qubits[1])] != p2)
      flag(seq, ViolationKind::position,
           "gate " + std::to_string(gate.id) + " recorded on p" + std::to_string(p1) + ", p" +
               std::to_string(p2) + " but its qubits sit on p" +
               std::to_string(pos_[static_cast<std::size_t>(gate.qubits[0])]) + ", p" +
               std::to_string(pos_[static_cast<std::size_t>(gate.qubits[1])]));
  }

  void check_singles(std::size_t seq, const std::vector<SingleQubitOp>& ops) {
    for (const auto& s : ops)
      if (s.logical < 0 || s.logical >= dag_.num_qubits() ||
          pos_[static_cast<std::size_t>(s.logical)] != s.physical)
        flag(seq, ViolationKind::position, "single-qubit " + s.kind + " placed on wrong qubit");
  }

  void teledata(std::size_t seq, const TeledataStep& t) {
    if (t.qubit < 0 || t.qubit >= dag_.num_qubits() || !valid(t.src_data) ||
        !valid(t.src_comm) || !valid(t.dst_comm)) {
      flag(seq, ViolationKind::malformed, "teledata references unknown qubits");
      return;
    }
    if (pos_[static_cast<std::size_t>(t.qubit)] != t.src_data)
      flag(seq, ViolationKind::position, "teledata source does not host the logical qubit");
    if (!arch_.is_comm(t.src_comm) || !arch_.is_comm(t.dst_comm) || !linked(t.src_comm, t.dst_comm))
      flag(seq, ViolationKind::adjacency, "teledata endpoints are not a link");
    if (at(t.src_comm) >= 0 || at(t.dst_comm) >= 0)
      flag(seq, ViolationKind::occupancy, "teledata over an occupied communication qubit");
    if (t.src_data == t.src_comm || !coupled(t.src_data, t.src_comm))
      flag(seq, ViolationKind::adjacency, "teledata source not adjacent to its comm qubit");
    if (free_in_core(arch_.core_of(t.dst_comm)) < 2)
      flag(seq, ViolationKind::capacity, "teledata into a core with fewer than two free qubits");
    const int here = pos_[static_cast<std::size_t>(t.qubit)];
    if (at(t.dst_comm) < 0) {
      at_[static_cast<std::size_t>(here)] = -1;
      at_[static_cast<std::size_t>(t.dst_comm)] = t.qubit;
      pos_[static_cast<std::size_t>(t.qubit)] = t.dst_comm;
    }
  }

  void telegate(std::size_t seq, const TelegateStep& t) {
    if (!gate_ready(seq, t.gate)) return;
    if (!valid(t.p1) || !valid(t.p2) || !valid(t.comm1) || !valid(t.comm2)) {
      flag(seq, ViolationKind::malformed, "telegate references unknown qubits");
      return;
    }
    const auto& gate = dag_.gate(t.gate);
    check_positions(seq, gate, t.p1, t.p2);
    if (arch_.core_of(t.p1) == arch_.core_of(t.p2))
      flag(seq, ViolationKind::adjacency, "telegate between qubits of one core");
    if (!arch_.is_comm(t.comm1) || !arch_.is_comm(t.comm2) || !linked(t.comm1, t.comm2))
      flag(seq, ViolationKind::adjacency, "telegate comm qubits are not a link");
    if (at(t.comm1) >= 0 || at(t.comm2) >= 0)
      flag(seq, ViolationKind::occupancy, "telegate over an occupied communication qubit");
    if (!coupled(t.p1, t.comm1) || !coupled(t.p2, t.comm2))
      flag(seq, ViolationKind::adjacency, "telegate data qubit not adjacent to its comm qubit");
    check_singles(seq, t.after);
    executed_[static_cast<std::size_t>(t.gate)] = 1;
  }

  void check_capacity(std::size_t seq) {
    for (int c = 0; c < arch_.num_cores(); ++c)
      if (free_in_core(c) < 1)
        flag(seq, ViolationKind::capacity, "core " + std::to_string(c) + " has no free qubit");
  }

  const CircuitDag& dag_;
  const Architecture& arch_;
  VerificationReport& report_;
  std::set<std::pair<int, int>> edges_;
  std::set<std::pair<int, int>> links_;
  std::vector<int> at_;   // physical -> logical
  std::vector<int> pos_;  // logical -> physical
  std::vector<char> executed_;
};

}  // namespace

VerificationReport verify(const CircuitDag& dag, const Architecture& arch,
                          const Schedule& schedule) {
  VerificationReport report;
  Replay replay(dag, arch, report);
  if (!replay.load(schedule)) return report;
  for (std::size_t i = 0; i < schedule.ops.size(); ++i) replay.step(i, schedule.ops[i]);
  replay.finish(schedule.ops.size(), schedule);
  return report;
}

}  // namespace mcroute
