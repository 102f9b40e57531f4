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

#include <array>
#include <cstddef>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcroute {

using GateId = int;

/// A single-qubit gate riding along with the two-qubit gate stream.
struct Annotation {
  std::string kind;
  int qubit = 0;

  bool operator==(const Annotation&) const = default;
};

/// Two-qubit gate node of the dependency DAG.
struct Gate {
  GateId id = 0;
  std::string kind;
  std::array<int, 2> qubits{};
  std::vector<GateId> predecessors;
  std::vector<GateId> successors;
  /// Single-qubit gates that follow this gate on one of its qubits, in
  /// program order, up to the next two-qubit gate on that qubit.
  std::vector<Annotation> trailing;
};

/// Dependency DAG over the two-qubit gates of a circuit, plus the mutable
/// execution state (which gates ran, which are ready).
///
/// An edge g -> h exists when h is the next two-qubit gate after g on one of
/// g's qubits. Single-qubit gates never block anything.
class CircuitDag {
 public:
  CircuitDag() = default;
  explicit CircuitDag(int num_qubits);

  /// Appends a two-qubit gate; the qubits must be distinct.
  GateId add_gate(std::string kind, int a, int b);
  /// Appends a single-qubit gate. It is attached to the latest two-qubit gate
  /// on `qubit`, or to the prologue if there is none yet.
  void add_single(std::string kind, int qubit);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& gate(GateId id) const { return gates_.at(static_cast<std::size_t>(id)); }
  std::span<const Gate> gates() const { return gates_; }
  const std::vector<Annotation>& prologue() const { return prologue_; }

  const std::set<GateId>& front() const { return front_; }
  bool in_front(GateId id) const { return front_.count(id) != 0; }
  bool executed(GateId id) const { return executed_.at(static_cast<std::size_t>(id)) != 0; }
  std::size_t num_executed() const { return num_executed_; }
  bool done() const { return num_executed_ == gates_.size(); }

  /// Marks a front gate executed. Returns the successors that became ready,
  /// in increasing id order. Throws PreconditionError if `id` is not in front.
  std::vector<GateId> execute(GateId id);

  /// Up to `size` unexecuted gates outside the front, collected breadth-first
  /// from the front with successors visited in id order.
  std::vector<GateId> extended_set(std::size_t size) const;

  /// Restores the unexecuted state.
  void reset();

 private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
  std::vector<Annotation> prologue_;
  std::vector<GateId> last_on_qubit_;
  std::vector<int> pending_preds_;
  std::vector<char> executed_;
  std::set<GateId> front_;
  std::size_t num_executed_ = 0;

  friend CircuitDag reverse(const CircuitDag& dag);
};

/// Same gates and qubits, every dependency edge inverted, nothing executed.
CircuitDag reverse(const CircuitDag& dag);

enum class CircuitFormat { qasm, gate_list };

/// Parses OpenQASM-subset text or gate-list JSON.
///
/// QASM subset: `qreg` (any number, concatenated), `creg`/`measure`/`barrier`
/// and headers ignored, any gate with two qubit arguments is a two-qubit gate,
/// any gate with one qubit argument is single-qubit. Bare operands such as
/// `q3` are accepted when no register of that name was declared.
CircuitDag parse_circuit(std::string_view text, CircuitFormat format);

/// Loads a circuit file; `.json` selects the gate-list format.
CircuitDag load_circuit(const std::filesystem::path& path);

/// Serializes to the gate-list JSON format (single-qubit gates included).
std::string to_gate_list_json(const CircuitDag& dag);

}  // namespace mcroute
