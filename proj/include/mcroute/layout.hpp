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

#include <compare>
#include <optional>
#include <span>
#include <variant>
#include <string>
#include <vector>

#include "mcroute/architecture.hpp"
#include "mcroute/circuit.hpp"

namespace mcroute {

inline constexpr int kNoQubit = -1;

/// Logical <-> physical assignment with per-core free counts and per-qubit
/// usage (decay) penalties.
///
/// Invariants: the two maps are mutually inverse, every core keeps at least
/// one free physical qubit, usage >= 1. The architecture must outlive the
/// layout.
class Layout {
 public:
  Layout() = default;
  /// `phys_of[q]` is the physical home of logical qubit q. Throws
  /// InfeasibleInstanceError when the assignment leaves a core without a free
  /// qubit, PreconditionError when it is not injective or out of range.
  Layout(const Architecture& arch, std::vector<int> phys_of);

  const Architecture& arch() const { return *arch_; }
  int num_logical() const { return static_cast<int>(phys_of_.size()); }
  int num_physical() const { return static_cast<int>(log_of_.size()); }

  int phys(int q) const { return phys_of_[static_cast<std::size_t>(q)]; }
  int core(int q) const { return arch_->core_of(phys(q)); }
  /// Logical qubit on `p`, or kNoQubit.
  int occupant(int p) const { return log_of_[static_cast<std::size_t>(p)]; }
  bool is_free(int p) const { return occupant(p) == kNoQubit; }
  int free_count(int core) const { return free_count_[static_cast<std::size_t>(core)]; }
  std::vector<int> free_qubits(int core) const;
  std::span<const int> phys_of() const { return phys_of_; }

  double usage(int p) const { return usage_[static_cast<std::size_t>(p)]; }
  void bump_usage(std::span<const int> qubits, double delta);
  void reset_usage();

  /// Exchanges the occupants of two physical qubits (either may be free).
  void swap_qubits(int p1, int p2);
  /// Moves logical qubit q to the free physical qubit `to` (any core).
  void move(int q, int to);

  /// Compares the assignment only; usage is bookkeeping.
  bool operator==(const Layout& other) const { return phys_of_ == other.phys_of_; }

  /// Re-checks every invariant; throws on violation.
  void check_invariants() const;

 private:
  const Architecture* arch_ = nullptr;
  std::vector<int> phys_of_;
  std::vector<int> log_of_;
  std::vector<int> free_count_;
  std::vector<double> usage_;
};

/// Intra-core SWAP; stored with a < b.
struct SwapOp {
  int a = 0;
  int b = 0;
  auto operator<=>(const SwapOp&) const = default;
};

/// Teleport logical `qubit` from `src_data` (adjacent to src_comm) onto
/// dst_comm across the link (src_comm, dst_comm).
struct TeledataOp {
  int qubit = 0;
  int src_data = 0;
  int src_comm = 0;
  int dst_comm = 0;
  auto operator<=>(const TeledataOp&) const = default;
};

/// Remote execution of `gate`: `data_a`/`comm_a` belong to the gate's first
/// qubit's core, `data_b`/`comm_b` to the second's.
struct TelegateOp {
  GateId gate = 0;
  int data_a = 0;
  int data_b = 0;
  int comm_a = 0;
  int comm_b = 0;
  auto operator<=>(const TelegateOp&) const = default;
};

using CandidateOp = std::variant<SwapOp, TeledataOp, TelegateOp>;

SwapOp make_swap(int p1, int p2);

/// Physical qubits an operation touches (for usage penalties and depth).
std::vector<int> touched(const CandidateOp& op);

bool is_inter_core(const CandidateOp& op);

/// One-line human-readable form, e.g. "swap p3 p4".
std::string describe(const CandidateOp& op);

/// Both logical qubits share a core and sit on adjacent physical qubits.
bool is_gate_executable(const Layout& layout, const Gate& gate);

/// Teledata of q over (src_comm -> dst_comm): both comm qubits free, q on a
/// qubit adjacent to (and distinct from) src_comm, destination core with at
/// least two free qubits.
bool teleport_feasible(const Layout& layout, int q, int src_comm, int dst_comm);

/// Telegate of `gate` over `link` (either orientation): comm qubits free and
/// each gate qubit adjacent to the link end in its own core.
bool telegate_feasible(const Layout& layout, const Gate& gate, const Link& link);

/// Builds the TelegateOp for a feasible (gate, link) pair.
TelegateOp make_telegate(const Layout& layout, const Gate& gate, const Link& link);

/// Applies a movement operation in place. Throws PreconditionError when the
/// operation is infeasible in the current layout.
void apply_operation(Layout& layout, const CandidateOp& op);

struct NearestFree {
  int distance = 0;
  std::optional<int> qubit;
};

/// Closest free qubit to `comm` within its core (comm itself when free);
/// ties go to the smallest id.
NearestFree nearest_free(const Layout& layout, int comm);

}  // namespace mcroute
