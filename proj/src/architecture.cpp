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

#include "mcroute/architecture.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mcroute/errors.hpp"

namespace mcroute {

Architecture::Architecture(std::vector<CoreSpec> cores, std::vector<Link> links)
    : cores_(std::move(cores)), links_(std::move(links)) {
  if (cores_.empty()) throw ArchitectureError("architecture has no cores");
  std::size_t n = 0;
  for (const auto& c : cores_) n += c.qubits.size();
  core_of_.assign(n, -1);
  kind_.assign(n, QubitKind::data);
  adjacency_.assign(n, {});
  links_of_.assign(n, {});

  for (std::size_t c = 0; c < cores_.size(); ++c) {
    auto& core = cores_[c];
    std::sort(core.qubits.begin(), core.qubits.end());
    std::sort(core.comm_qubits.begin(), core.comm_qubits.end());
    core.comm_qubits.erase(std::unique(core.comm_qubits.begin(), core.comm_qubits.end()),
                           core.comm_qubits.end());
    if (core.qubits.size() < 2)
      throw ArchitectureError("core " + std::to_string(c) + " has fewer than 2 qubits");
    for (int p : core.qubits) {
      if (p < 0 || static_cast<std::size_t>(p) >= n)
        throw ArchitectureError("qubit id " + std::to_string(p) + " out of range 0.." +
                                std::to_string(n - 1));
      if (core_of_[static_cast<std::size_t>(p)] != -1)
        throw ArchitectureError("qubit " + std::to_string(p) + " listed twice");
      core_of_[static_cast<std::size_t>(p)] = static_cast<int>(c);
    }
  }
  for (std::size_t c = 0; c < cores_.size(); ++c) {
    auto& core = cores_[c];
    if (core.comm_qubits.empty() && cores_.size() > 1)
      throw ArchitectureError("core " + std::to_string(c) + " has no communication qubit");
    for (int p : core.comm_qubits) {
      if (p < 0 || static_cast<std::size_t>(p) >= n || core_of(p) != static_cast<int>(c))
        throw ArchitectureError("comm qubit " + std::to_string(p) + " is not in core " +
                                std::to_string(c));
      kind_[static_cast<std::size_t>(p)] = QubitKind::communication;
      comm_qubits_.push_back(p);
    }
    for (auto& [a, b] : core.edges) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
          static_cast<std::size_t>(b) >= n || core_of(a) != static_cast<int>(c) ||
          core_of(b) != static_cast<int>(c))
        throw ArchitectureError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                ") leaves core " + std::to_string(c));
      if (a == b) throw ArchitectureError("self-loop on qubit " + std::to_string(a));
      if (a > b) std::swap(a, b);
      adjacency_[static_cast<std::size_t>(a)].push_back(b);
      adjacency_[static_cast<std::size_t>(b)].push_back(a);
    }
  }
  std::sort(comm_qubits_.begin(), comm_qubits_.end());
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const auto& l = links_[i];
    for (int p : {l.a, l.b}) {
      if (p < 0 || static_cast<std::size_t>(p) >= n || !is_comm(p))
        throw ArchitectureError("link endpoint " + std::to_string(p) +
                                " is not a communication qubit");
    }
    if (core_of(l.a) == core_of(l.b))
      throw ArchitectureError("link (" + std::to_string(l.a) + "," + std::to_string(l.b) +
                              ") joins qubits of the same core");
    links_of_[static_cast<std::size_t>(l.a)].push_back(static_cast<int>(i));
    links_of_[static_cast<std::size_t>(l.b)].push_back(static_cast<int>(i));
  }

  distances_ = compute_distances(*this);
  for (std::size_t c = 0; c < cores_.size(); ++c) {
    const auto& q = cores_[c].qubits;
    for (int p : q)
      if (distances_(q.front(), p) == DistanceTable::unreachable)
        throw ArchitectureError("core " + std::to_string(c) + " is not connected");
  }
}

DistanceTable compute_distances(const Architecture& arch) {
  const int n = static_cast<int>(arch.core_of_.size());
  DistanceTable d(n);
  for (const auto& core : arch.cores_) {
    const auto& qs = core.qubits;
    for (int p : qs) d.at(p, p) = 0;
    for (const auto& [a, b] : core.edges) {
      if (a == b) continue;
      d.at(a, b) = 1;
      d.at(b, a) = 1;
    }
    for (int k : qs)
      for (int i : qs) {
        const int dik = d(i, k);
        if (dik == DistanceTable::unreachable) continue;
        for (int j : qs) {
          const int dkj = d(k, j);
          if (dkj != DistanceTable::unreachable && dik + dkj < d(i, j)) d.at(i, j) = dik + dkj;
        }
      }
  }
  return d;
}

Architecture Architecture::from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    std::vector<CoreSpec> cores;
    for (const auto& c : doc.at("cores")) {
      CoreSpec spec;
      spec.qubits = c.at("qubits").get<std::vector<int>>();
      spec.comm_qubits = c.at("comm_qubits").get<std::vector<int>>();
      for (const auto& e : c.at("edges")) {
        const auto pair = e.get<std::vector<int>>();
        if (pair.size() != 2) throw ArchitectureError("edge must have two endpoints");
        spec.edges.emplace_back(pair[0], pair[1]);
      }
      cores.push_back(std::move(spec));
    }
    std::vector<Link> links;
    if (doc.contains("links")) {
      for (const auto& l : doc.at("links")) {
        const auto pair = l.get<std::vector<int>>();
        if (pair.size() != 2) throw ArchitectureError("link must have two endpoints");
        links.push_back({pair[0], pair[1]});
      }
    }
    return Architecture(std::move(cores), std::move(links));
  } catch (const nlohmann::json::exception& e) {
    throw ArchitectureError(std::string("architecture schema: ") + e.what());
  }
}

Architecture Architecture::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArchitectureError("cannot open architecture file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string Architecture::to_json() const {
  nlohmann::json cores = nlohmann::json::array();
  for (const auto& c : cores_) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : c.edges) edges.push_back({a, b});
    cores.push_back({{"qubits", c.qubits}, {"comm_qubits", c.comm_qubits}, {"edges", edges}});
  }
  nlohmann::json links = nlohmann::json::array();
  for (const auto& l : links_) links.push_back({l.a, l.b});
  return nlohmann::json{{"cores", cores}, {"links", links}}.dump();
}

Architecture generate_grid_architecture(const GridSpec& s) {
  if (s.cores_x < 1 || s.cores_y < 1 || s.core_rows < 1 || s.core_cols < 1 ||
      s.comm_per_side < 1)
    throw ArchitectureError("grid parameters must be >= 1");
  if (s.core_rows * s.core_cols < 2) throw ArchitectureError("cores need at least 2 qubits");
  if (s.cores_x > 1 && s.comm_per_side > s.core_rows)
    throw ArchitectureError("comm_per_side exceeds the core's vertical side");
  if (s.cores_y > 1 && s.comm_per_side > s.core_cols)
    throw ArchitectureError("comm_per_side exceeds the core's horizontal side");

  const int per_core = s.core_rows * s.core_cols;
  const int num_cores = s.cores_x * s.cores_y;
  auto qubit = [&](int core, int r, int c) { return core * per_core + r * s.core_cols + c; };
  // Evenly spread positions along a side of length `len`.
  auto spread = [&](int len) {
    std::vector<int> pos;
    for (int i = 0; i < s.comm_per_side; ++i)
      pos.push_back((2 * i + 1) * len / (2 * s.comm_per_side));
    return pos;
  };

  std::vector<CoreSpec> cores(static_cast<std::size_t>(num_cores));
  for (int c = 0; c < num_cores; ++c) {
    auto& spec = cores[static_cast<std::size_t>(c)];
    for (int r = 0; r < s.core_rows; ++r)
      for (int col = 0; col < s.core_cols; ++col) {
        spec.qubits.push_back(qubit(c, r, col));
        if (col + 1 < s.core_cols) spec.edges.emplace_back(qubit(c, r, col), qubit(c, r, col + 1));
        if (r + 1 < s.core_rows) spec.edges.emplace_back(qubit(c, r, col), qubit(c, r + 1, col));
      }
  }

  std::vector<Link> links;
  for (int cy = 0; cy < s.cores_y; ++cy)
    for (int cx = 0; cx < s.cores_x; ++cx) {
      const int c = cy * s.cores_x + cx;
      if (cx + 1 < s.cores_x) {
        const int right = c + 1;
        for (int r : spread(s.core_rows)) {
          const int a = qubit(c, r, s.core_cols - 1);
          const int b = qubit(right, r, 0);
          links.push_back({a, b});
          cores[static_cast<std::size_t>(c)].comm_qubits.push_back(a);
          cores[static_cast<std::size_t>(right)].comm_qubits.push_back(b);
        }
      }
      if (cy + 1 < s.cores_y) {
        const int below = c + s.cores_x;
        for (int col : spread(s.core_cols)) {
          const int a = qubit(c, s.core_rows - 1, col);
          const int b = qubit(below, 0, col);
          links.push_back({a, b});
          cores[static_cast<std::size_t>(c)].comm_qubits.push_back(a);
          cores[static_cast<std::size_t>(below)].comm_qubits.push_back(b);
        }
      }
    }
  return Architecture(std::move(cores), std::move(links));
}

namespace {

int parse_int(std::string_view& text, std::string_view full) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr == text.data())
    throw ArchitectureError("malformed grid spec '" + std::string(full) + "'");
  text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
  return value;
}

void expect_char(std::string_view& text, char c, std::string_view full) {
  if (text.empty() || (text.front() != c && !(c == 'x' && text.front() == 'X')))
    throw ArchitectureError("malformed grid spec '" + std::string(full) + "'");
  text.remove_prefix(1);
}

}  // namespace

GridSpec parse_grid_spec(std::string_view full) {
  std::string compact;
  for (char c : full)
    if (c != ' ') compact.push_back(c);
  std::string_view text = compact;
  if (text.substr(0, 5) != "grid:") throw ArchitectureError("grid spec must start with 'grid:'");
  text.remove_prefix(5);
  GridSpec s;
  s.cores_x = parse_int(text, full);
  expect_char(text, 'x', full);
  s.cores_y = parse_int(text, full);
  expect_char(text, ',', full);
  s.core_rows = parse_int(text, full);
  expect_char(text, 'x', full);
  s.core_cols = parse_int(text, full);
  expect_char(text, ',', full);
  s.comm_per_side = parse_int(text, full);
  if (!text.empty()) throw ArchitectureError("trailing text in grid spec '" + std::string(full) + "'");
  return s;
}

Architecture load_architecture(std::string_view source) {
  if (source.substr(0, 5) == "grid:") return generate_grid_architecture(parse_grid_spec(source));
  return Architecture::from_file(std::filesystem::path(std::string(source)));
}

}  // namespace mcroute
