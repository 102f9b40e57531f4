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

#include <cstddef>
#include <string>
#include <vector>

#include "mcroute/architecture.hpp"
#include "mcroute/circuit.hpp"
#include "mcroute/schedule.hpp"

namespace mcroute {

enum class ViolationKind {
  malformed,   // ids out of range, inconsistent sizes
  adjacency,   // qubits not coupled / not linked
  ordering,    // gate not ready, or executed twice
  position,    // recorded physical qubit disagrees with the replayed layout
  occupancy,   // comm qubit not free, swap of two holes, target occupied
  capacity,    // core left without a free qubit, destination too full
  incomplete,  // gates never executed
  final_layout,
};

struct Violation {
  std::size_t seq = 0;  // op index; ops.size() for end-of-schedule checks
  ViolationKind kind = ViolationKind::malformed;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

const char* to_string(ViolationKind kind);

/// Replays `schedule` from its initial layout and lists every hardware or
/// dependency violation. Shares nothing with the router beyond the
/// Architecture description; front layers are recomputed from scratch.
VerificationReport verify(const CircuitDag& dag, const Architecture& arch,
                          const Schedule& schedule);

}  // namespace mcroute
