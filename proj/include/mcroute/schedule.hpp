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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcroute/circuit.hpp"

namespace mcroute {

/// Single-qubit gate re-emitted at its physical position.
struct SingleQubitOp {
  std::string kind;
  int logical = 0;
  int physical = 0;

  bool operator==(const SingleQubitOp&) const = default;
};

struct LocalGateStep {
  GateId gate = 0;
  int p1 = 0;
  int p2 = 0;
  std::vector<SingleQubitOp> after;

  bool operator==(const LocalGateStep&) const = default;
};

struct SwapStep {
  int p1 = 0;
  int p2 = 0;

  bool operator==(const SwapStep&) const = default;
};

struct TeledataStep {
  int qubit = 0;
  int src_data = 0;
  int src_comm = 0;
  int dst_comm = 0;

  bool operator==(const TeledataStep&) const = default;
};

/// Remote gate: p1/comm1 sit in the core of the gate's first qubit.
struct TelegateStep {
  GateId gate = 0;
  int p1 = 0;
  int p2 = 0;
  int comm1 = 0;
  int comm2 = 0;
  std::vector<SingleQubitOp> after;

  bool operator==(const TelegateStep&) const = default;
};

using CompiledOp = std::variant<LocalGateStep, SwapStep, TeledataStep, TelegateStep>;

struct OpCounts {
  int swaps = 0;
  int teledata = 0;
  int telegate = 0;
  int local_gates = 0;

  int intercore() const { return teledata + telegate; }
  bool operator==(const OpCounts&) const = default;
};

/// Compiled op stream. Sequence numbers are positions in `ops`.
struct Schedule {
  int num_physical = 0;
  std::vector<int> initial_layout;  // logical -> physical
  std::vector<int> final_layout;
  std::vector<SingleQubitOp> prologue;
  std::vector<CompiledOp> ops;

  /// Tallied from `ops` on every call.
  OpCounts counts() const;

  bool operator==(const Schedule&) const = default;
};

/// Per-kind durations for depth. A zero single-qubit duration leaves
/// annotations out of the depth.
struct Durations {
  int local_gate = 1;
  int swap = 1;
  int teledata = 1;
  int telegate = 1;
  int single_qubit = 0;
};

/// ASAP makespan: each op starts when all physical qubits it touches are free.
int compute_depth(const Schedule& schedule, const Durations& durations = {});

enum class EmitFormat { json, csv_summary, annotated_text };

/// Context for the csv-summary row.
struct RunInfo {
  std::string circuit;
  std::string arch;
  std::uint64_t seed = 0;
  double runtime_ms = 0.0;
};

std::string emit(const Schedule& schedule, EmitFormat format, const RunInfo& info = {},
                 const Durations& durations = {});

std::string csv_header();
Schedule schedule_from_json(std::string_view text);

}  // namespace mcroute
