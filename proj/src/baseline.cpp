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

#include "mcroute/baseline.hpp"

#include <random>
#include <string>

#include "greedy_mover.hpp"
#include "mcroute/errors.hpp"
#include "mcroute/log.hpp"

namespace mcroute {

namespace {

class Greedy {
 public:
  Greedy(CircuitDag dag, const Layout& initial, std::uint64_t seed, int max_stall)
      : dag_(std::move(dag)),
        layout_(initial),
        rng_(seed),
        max_stall_(max_stall),
        mover_(layout_, rng_, [this](const CandidateOp& op) { commit(op); },
               [this](std::string reason) { fail(std::move(reason)); }) {
    layout_.reset_usage();
    schedule_ = start_schedule(dag_, layout_);
  }

  RoutingResult run() {
    while (!dag_.done()) {
      if (execute_ready_gates(dag_, layout_, schedule_) > 0) {
        stall_ = 0;
        continue;
      }
      mover_.advance(dag_.gate(*dag_.front().begin()));
    }
    schedule_.final_layout.assign(layout_.phys_of().begin(), layout_.phys_of().end());
    return RoutingResult{std::move(schedule_), std::move(layout_)};
  }

 private:
  void commit(const CandidateOp& op) {
    if (stall_ >= max_stall_) fail("no gate executed within " + std::to_string(max_stall_) +
                                   " movement operations");
    apply_operation(layout_, op);
    record_movement(schedule_, dag_, layout_, op);
    ++stall_;
    log::debug([&] { return "greedy op " + describe(op); });
  }

  [[noreturn]] void fail(std::string reason) const {
    throw DeadlockError(deadlock_info(dag_, layout_, stall_, std::move(reason)));
  }

  CircuitDag dag_;
  Layout layout_;
  Schedule schedule_;
  std::mt19937_64 rng_;
  int max_stall_;
  int stall_ = 0;
  detail::GreedyMover mover_;
};

}  // namespace

RoutingResult run_greedy(CircuitDag dag, const Layout& initial, std::uint64_t seed,
                         std::optional<int> max_stall) {
  if (dag.num_qubits() != initial.num_logical())
    throw PreconditionError("layout and circuit disagree on the number of logical qubits");
  dag.reset();
  const int stall = max_stall.value_or(10 * initial.arch().num_qubits());
  if (stall <= 0) throw PreconditionError("max_stall must be positive");
  return Greedy(std::move(dag), initial, seed, stall).run();
}

}  // namespace mcroute
