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

#include "mcroute/initial_layout.hpp"

#include <algorithm>
#include <random>

#include "mcroute/errors.hpp"
#include "mcroute/router.hpp"

namespace mcroute {

Layout initial_layout(const Architecture& arch, const CircuitDag& dag, std::uint64_t seed) {
  const int n = dag.num_qubits();
  const int num_cores = arch.num_cores();
  if (n > arch.num_qubits() - num_cores)
    throw InfeasibleInstanceError(std::to_string(n) + " logical qubits exceed the " +
                                  std::to_string(arch.num_qubits() - num_cores) +
                                  " usable physical qubits (one stays free per core)");

  std::mt19937_64 rng(seed);
  std::vector<int> room;
  for (const auto& core : arch.cores()) room.push_back(static_cast<int>(core.qubits.size()) - 1);
  std::vector<int> home(static_cast<std::size_t>(n), -1);

  // Core with the most room (>= need); random among equals.
  auto pick_core = [&](int need) {
    int most = need - 1;
    std::vector<int> best;
    for (int c = 0; c < num_cores; ++c) {
      if (room[static_cast<std::size_t>(c)] > most) {
        most = room[static_cast<std::size_t>(c)];
        best.clear();
      }
      if (room[static_cast<std::size_t>(c)] == most && most >= need) best.push_back(c);
    }
    if (best.empty()) return -1;
    std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
    return best[pick(rng)];
  };
  auto place = [&](int q, int c) {
    home[static_cast<std::size_t>(q)] = c;
    --room[static_cast<std::size_t>(c)];
  };

  const CircuitDag fresh = [&] {
    CircuitDag copy = dag;
    copy.reset();
    return copy;
  }();
  for (GateId g : fresh.front()) {
    const auto [a, b] = fresh.gate(g).qubits;
    const int ha = home[static_cast<std::size_t>(a)];
    const int hb = home[static_cast<std::size_t>(b)];
    if (ha < 0 && hb < 0) {
      if (const int c = pick_core(2); c >= 0) {
        place(a, c);
        place(b, c);
      }
    } else if (ha < 0 && room[static_cast<std::size_t>(hb)] > 0) {
      place(a, hb);
    } else if (hb < 0 && room[static_cast<std::size_t>(ha)] > 0) {
      place(b, ha);
    }
  }

  int cursor = 0;
  for (int q = 0; q < n; ++q) {
    if (home[static_cast<std::size_t>(q)] >= 0) continue;
    while (room[static_cast<std::size_t>(cursor)] == 0) cursor = (cursor + 1) % num_cores;
    place(q, cursor);
    cursor = (cursor + 1) % num_cores;
  }

  std::vector<int> phys_of(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < num_cores; ++c) {
    std::vector<int> slots = arch.core(c).qubits;
    std::shuffle(slots.begin(), slots.end(), rng);
    std::size_t next = 0;
    for (int q = 0; q < n; ++q)
      if (home[static_cast<std::size_t>(q)] == c) phys_of[static_cast<std::size_t>(q)] = slots[next++];
  }
  return Layout(arch, std::move(phys_of));
}

Layout optimize_initial(const Architecture& arch, const CircuitDag& dag, std::uint64_t seed,
                        const RouterParams& params) {
  Layout start = initial_layout(arch, dag, seed);
  if (dag.empty()) return start;
  CircuitDag forward = dag;
  forward.reset();
  const auto pass1 = run(std::move(forward), start, params);
  const auto pass2 = run(reverse(dag), pass1.final_layout, params);
  Layout out = pass2.final_layout;
  out.reset_usage();
  return out;
}

}  // namespace mcroute
