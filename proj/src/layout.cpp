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

#include "mcroute/layout.hpp"

#include <algorithm>
#include <string>

#include "mcroute/errors.hpp"

namespace mcroute {

Layout::Layout(const Architecture& arch, std::vector<int> phys_of)
    : arch_(&arch),
      phys_of_(std::move(phys_of)),
      log_of_(static_cast<std::size_t>(arch.num_qubits()), kNoQubit),
      usage_(static_cast<std::size_t>(arch.num_qubits()), 1.0) {
  for (const auto& core : arch.cores())
    free_count_.push_back(static_cast<int>(core.qubits.size()));
  for (std::size_t q = 0; q < phys_of_.size(); ++q) {
    const int p = phys_of_[q];
    if (p < 0 || p >= arch.num_qubits())
      throw PreconditionError("logical qubit " + std::to_string(q) + " mapped out of range");
    if (log_of_[static_cast<std::size_t>(p)] != kNoQubit)
      throw PreconditionError("physical qubit " + std::to_string(p) + " hosts two logical qubits");
    log_of_[static_cast<std::size_t>(p)] = static_cast<int>(q);
    --free_count_[static_cast<std::size_t>(arch.core_of(p))];
  }
  for (std::size_t c = 0; c < free_count_.size(); ++c)
    if (free_count_[c] < 1)
      throw InfeasibleInstanceError("core " + std::to_string(c) + " has no free physical qubit");
}

std::vector<int> Layout::free_qubits(int core) const {
  std::vector<int> out;
  for (int p : arch_->core(core).qubits)
    if (is_free(p)) out.push_back(p);
  return out;
}

void Layout::bump_usage(std::span<const int> qubits, double delta) {
  for (int p : qubits) usage_[static_cast<std::size_t>(p)] += delta;
}

void Layout::reset_usage() { std::fill(usage_.begin(), usage_.end(), 1.0); }

void Layout::swap_qubits(int p1, int p2) {
  auto& l1 = log_of_[static_cast<std::size_t>(p1)];
  auto& l2 = log_of_[static_cast<std::size_t>(p2)];
  std::swap(l1, l2);
  if (l1 != kNoQubit) phys_of_[static_cast<std::size_t>(l1)] = p1;
  if (l2 != kNoQubit) phys_of_[static_cast<std::size_t>(l2)] = p2;
  const int c1 = arch_->core_of(p1);
  const int c2 = arch_->core_of(p2);
  if (c1 != c2) {
    // Only reachable through move(); keeps counts honest either way.
    free_count_[static_cast<std::size_t>(c1)] += (l1 == kNoQubit) - (l2 == kNoQubit);
    free_count_[static_cast<std::size_t>(c2)] += (l2 == kNoQubit) - (l1 == kNoQubit);
  }
}

void Layout::move(int q, int to) {
  if (!is_free(to)) throw PreconditionError("move target " + std::to_string(to) + " is occupied");
  swap_qubits(phys(q), to);
}

void Layout::check_invariants() const {
  std::vector<int> counts;
  for (const auto& core : arch_->cores()) counts.push_back(static_cast<int>(core.qubits.size()));
  for (std::size_t q = 0; q < phys_of_.size(); ++q) {
    const int p = phys_of_[q];
    if (log_of_[static_cast<std::size_t>(p)] != static_cast<int>(q))
      throw PreconditionError("layout maps are not inverse at logical " + std::to_string(q));
    --counts[static_cast<std::size_t>(arch_->core_of(p))];
  }
  int hosted = 0;
  for (int l : log_of_) hosted += l != kNoQubit;
  if (hosted != num_logical()) throw PreconditionError("stray occupant in physical map");
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] != free_count_[c]) throw PreconditionError("stale free count");
    if (counts[c] < 1)
      throw PreconditionError("core " + std::to_string(c) + " has no free physical qubit");
  }
  for (double u : usage_)
    if (u < 1.0) throw PreconditionError("usage below 1");
}

SwapOp make_swap(int p1, int p2) { return p1 < p2 ? SwapOp{p1, p2} : SwapOp{p2, p1}; }

std::vector<int> touched(const CandidateOp& op) {
  struct Visitor {
    std::vector<int> operator()(const SwapOp& s) const { return {s.a, s.b}; }
    std::vector<int> operator()(const TeledataOp& t) const {
      return {t.src_data, t.src_comm, t.dst_comm};
    }
    std::vector<int> operator()(const TelegateOp& t) const {
      return {t.data_a, t.data_b, t.comm_a, t.comm_b};
    }
  };
  return std::visit(Visitor{}, op);
}

bool is_inter_core(const CandidateOp& op) { return !std::holds_alternative<SwapOp>(op); }

std::string describe(const CandidateOp& op) {
  auto p = [](int q) { return " p" + std::to_string(q); };
  if (const auto* s = std::get_if<SwapOp>(&op)) return "swap" + p(s->a) + p(s->b);
  if (const auto* t = std::get_if<TeledataOp>(&op))
    return "teledata q" + std::to_string(t->qubit) + p(t->src_data) + " via" + p(t->src_comm) +
           " ->" + p(t->dst_comm);
  const auto& t = std::get<TelegateOp>(op);
  return "telegate g" + std::to_string(t.gate) + p(t.data_a) + p(t.data_b) + " via" + p(t.comm_a) +
         p(t.comm_b);
}

bool is_gate_executable(const Layout& layout, const Gate& gate) {
  const int p1 = layout.phys(gate.qubits[0]);
  const int p2 = layout.phys(gate.qubits[1]);
  return layout.arch().core_of(p1) == layout.arch().core_of(p2) && layout.arch().adjacent(p1, p2);
}

namespace {

bool linked(const Architecture& arch, int c1, int c2) {
  for (int li : arch.links_of(c1)) {
    const auto& l = arch.links()[static_cast<std::size_t>(li)];
    if ((l.a == c1 && l.b == c2) || (l.a == c2 && l.b == c1)) return true;
  }
  return false;
}

}  // namespace

bool teleport_feasible(const Layout& layout, int q, int src_comm, int dst_comm) {
  const auto& arch = layout.arch();
  if (!arch.is_comm(src_comm) || !arch.is_comm(dst_comm) || !linked(arch, src_comm, dst_comm))
    return false;
  if (!layout.is_free(src_comm) || !layout.is_free(dst_comm)) return false;
  const int p = layout.phys(q);
  if (p == src_comm || arch.core_of(p) != arch.core_of(src_comm) || !arch.adjacent(p, src_comm))
    return false;
  return layout.free_count(arch.core_of(dst_comm)) >= 2;
}

bool telegate_feasible(const Layout& layout, const Gate& gate, const Link& link) {
  const auto& arch = layout.arch();
  const int pa = layout.phys(gate.qubits[0]);
  const int pb = layout.phys(gate.qubits[1]);
  const int ca = arch.core_of(pa);
  const int cb = arch.core_of(pb);
  if (ca == cb) return false;
  int comm_a = link.a;
  int comm_b = link.b;
  if (arch.core_of(comm_a) != ca) std::swap(comm_a, comm_b);
  if (arch.core_of(comm_a) != ca || arch.core_of(comm_b) != cb) return false;
  if (!layout.is_free(comm_a) || !layout.is_free(comm_b)) return false;
  return arch.adjacent(pa, comm_a) && arch.adjacent(pb, comm_b);
}

TelegateOp make_telegate(const Layout& layout, const Gate& gate, const Link& link) {
  const auto& arch = layout.arch();
  const int pa = layout.phys(gate.qubits[0]);
  const int pb = layout.phys(gate.qubits[1]);
  int comm_a = link.a;
  int comm_b = link.b;
  if (arch.core_of(comm_a) != arch.core_of(pa)) std::swap(comm_a, comm_b);
  return TelegateOp{gate.id, pa, pb, comm_a, comm_b};
}

void apply_operation(Layout& layout, const CandidateOp& op) {
  const auto& arch = layout.arch();
  if (const auto* s = std::get_if<SwapOp>(&op)) {
    if (s->a < 0 || s->b < 0 || s->a >= arch.num_qubits() || s->b >= arch.num_qubits())
      throw PreconditionError("swap endpoint out of range");
    if (arch.core_of(s->a) != arch.core_of(s->b) || !arch.adjacent(s->a, s->b))
      throw PreconditionError("swap endpoints are not coupled");
    if (layout.is_free(s->a) && layout.is_free(s->b))
      throw PreconditionError("swap between two free qubits");
    layout.swap_qubits(s->a, s->b);
  } else if (const auto* t = std::get_if<TeledataOp>(&op)) {
    if (layout.phys(t->qubit) != t->src_data ||
        !teleport_feasible(layout, t->qubit, t->src_comm, t->dst_comm))
      throw PreconditionError("infeasible teledata of logical " + std::to_string(t->qubit));
    layout.move(t->qubit, t->dst_comm);
  } else {
    // Telegate leaves the assignment untouched; feasibility is checked by the
    // caller that owns the gate.
    const auto& g = std::get<TelegateOp>(op);
    if (!layout.is_free(g.comm_a) || !layout.is_free(g.comm_b))
      throw PreconditionError("telegate over occupied communication qubit");
  }
}

NearestFree nearest_free(const Layout& layout, int comm) {
  if (layout.is_free(comm)) return {0, comm};
  const auto& arch = layout.arch();
  const auto& d = arch.distances();
  NearestFree best{DistanceTable::unreachable, std::nullopt};
  for (int p : arch.core(arch.core_of(comm)).qubits) {
    if (!layout.is_free(p)) continue;
    const int dist = d(comm, p);
    if (dist < best.distance) best = {dist, p};  // qubits are sorted: first hit wins ties
  }
  return best;
}

}  // namespace mcroute
