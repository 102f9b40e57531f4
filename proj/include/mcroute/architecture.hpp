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

#include <filesystem>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcroute {

enum class QubitKind { data, communication };

struct CoreSpec {
  std::vector<int> qubits;
  std::vector<int> comm_qubits;
  std::vector<std::pair<int, int>> edges;
};

/// Inter-core connection between two communication qubits.
struct Link {
  int a = 0;
  int b = 0;

  bool operator==(const Link&) const = default;
};

/// Dense hop-count matrix over all physical qubits. Entries between qubits of
/// different cores are `unreachable`: SWAPs never cross a core boundary.
class DistanceTable {
 public:
  static constexpr int unreachable = std::numeric_limits<int>::max() / 4;

  DistanceTable() = default;
  explicit DistanceTable(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), unreachable) {}

  int size() const { return n_; }
  int operator()(int p, int q) const { return d_[index(p, q)]; }
  int& at(int p, int q) { return d_[index(p, q)]; }

  bool operator==(const DistanceTable&) const = default;

 private:
  std::size_t index(int p, int q) const {
    return static_cast<std::size_t>(p) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(q);
  }

  int n_ = 0;
  std::vector<int> d_;
};

/// Immutable multi-core device: cores with intra-core coupling graphs,
/// communication qubits, and inter-core links between them.
///
/// Physical qubit ids are 0..N-1. Construction validates:
///  - every id belongs to exactly one core;
///  - intra edges stay inside their core; links join comm qubits of two
///    different cores;
///  - each core is connected, has >= 2 qubits and, on multi-core devices,
///    at least one communication qubit.
class Architecture {
 public:
  Architecture() = default;
  Architecture(std::vector<CoreSpec> cores, std::vector<Link> links);

  static Architecture from_json(std::string_view text);
  static Architecture from_file(const std::filesystem::path& path);
  std::string to_json() const;

  int num_qubits() const { return static_cast<int>(core_of_.size()); }
  int num_cores() const { return static_cast<int>(cores_.size()); }

  const CoreSpec& core(int c) const { return cores_.at(static_cast<std::size_t>(c)); }
  std::span<const CoreSpec> cores() const { return cores_; }
  std::span<const Link> links() const { return links_; }

  int core_of(int p) const { return core_of_[static_cast<std::size_t>(p)]; }
  QubitKind kind(int p) const { return kind_[static_cast<std::size_t>(p)]; }
  bool is_comm(int p) const { return kind(p) == QubitKind::communication; }

  /// Intra-core neighbours in increasing id order.
  std::span<const int> neighbors(int p) const { return adjacency_[static_cast<std::size_t>(p)]; }
  bool adjacent(int p, int q) const { return distances_(p, q) == 1; }

  /// Indices into links() touching comm qubit `p`.
  std::span<const int> links_of(int p) const { return links_of_[static_cast<std::size_t>(p)]; }
  /// All communication qubits in increasing id order.
  std::span<const int> comm_qubits() const { return comm_qubits_; }

  const DistanceTable& distances() const { return distances_; }

 private:
  std::vector<CoreSpec> cores_;
  std::vector<Link> links_;
  std::vector<int> core_of_;
  std::vector<QubitKind> kind_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> links_of_;
  std::vector<int> comm_qubits_;
  DistanceTable distances_;

  friend DistanceTable compute_distances(const Architecture& arch);
};

/// All-pairs intra-core hop counts (Floyd-Warshall per core, links ignored).
DistanceTable compute_distances(const Architecture& arch);

struct GridSpec {
  int cores_x = 1;
  int cores_y = 1;
  int core_rows = 2;
  int core_cols = 2;
  int comm_per_side = 1;
};

/// A cores_x x cores_y grid of core_rows x core_cols lattices. Each pair of
/// neighbouring cores gets comm_per_side links between facing boundary
/// qubits, spread evenly along the shared side. Core index is row-major over
/// the grid, qubits are numbered row-major inside each core, core by core.
Architecture generate_grid_architecture(const GridSpec& spec);

/// Parses `grid:CXxCY,RxC,K`, e.g. `grid:2x1,2x2,1`.
GridSpec parse_grid_spec(std::string_view text);

/// `grid:...` specs are generated; anything else is read as a JSON file.
Architecture load_architecture(std::string_view source);

}  // namespace mcroute
