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

// Internal: teleport-on-demand movement shared by the greedy baseline and the
// router's release valve.

#pragma once

#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mcroute/circuit.hpp"
#include "mcroute/layout.hpp"

namespace mcroute::detail {

class GreedyMover {
 public:
  // `commit` applies and records one movement; `fail` must throw.
  using Commit = std::function<void(const CandidateOp&)>;
  using Fail = std::function<void(std::string)>;

  // With `allow_telegate`, a gate whose cores are directly linked but too
  // full to teleport into is executed by a telegate instead of evicting.
  GreedyMover(Layout& layout, std::mt19937_64& rng, Commit commit, Fail fail,
              bool allow_telegate = false)
      : layout_(layout),
        arch_(layout.arch()),
        rng_(rng),
        commit_(std::move(commit)),
        fail_(std::move(fail)),
        allow_telegate_(allow_telegate) {}

  // One round of progress on `gate`: a full approach for a local gate, one
  // core hop (or one eviction chain) for a cross-core gate.
  void advance(const Gate& gate);

 private:
  [[noreturn]] void fail(std::string reason) const;
  std::vector<int> core_path(int from, int to) const;
  void approach(int q, int target);
  void vacate(int p);
  std::vector<int> core_route(int from, int to) const;
  std::vector<int> neighbor_cores(int core) const;
  void hop(int q, int to);
  bool evict_into_neighbours(int core, std::array<int, 2> keep);
  bool telegate_across(const Gate& gate);
  void cross(const Gate& gate);

  Layout& layout_;
  const Architecture& arch_;
  std::mt19937_64& rng_;
  Commit commit_;
  Fail fail_;
  bool allow_telegate_;
};

}  // namespace mcroute::detail
