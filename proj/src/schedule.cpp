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

#include "mcroute/schedule.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "mcroute/errors.hpp"

namespace mcroute {

using nlohmann::json;

OpCounts Schedule::counts() const {
  OpCounts c;
  for (const auto& op : ops) {
    if (std::holds_alternative<SwapStep>(op)) ++c.swaps;
    else if (std::holds_alternative<TeledataStep>(op)) ++c.teledata;
    else if (std::holds_alternative<TelegateStep>(op)) ++c.telegate;
    else ++c.local_gates;
  }
  return c;
}

int compute_depth(const Schedule& schedule, const Durations& dur) {
  std::vector<int> busy_until(static_cast<std::size_t>(schedule.num_physical), 0);
  int depth = 0;
  auto occupy = [&](std::initializer_list<int> qubits, int duration) {
    int start = 0;
    for (int p : qubits) start = std::max(start, busy_until[static_cast<std::size_t>(p)]);
    const int finish = start + duration;
    for (int p : qubits) busy_until[static_cast<std::size_t>(p)] = finish;
    depth = std::max(depth, finish);
  };
  auto singles = [&](const std::vector<SingleQubitOp>& ops) {
    if (dur.single_qubit <= 0) return;
    for (const auto& s : ops) occupy({s.physical}, dur.single_qubit);
  };

  singles(schedule.prologue);
  for (const auto& op : schedule.ops) {
    if (const auto* g = std::get_if<LocalGateStep>(&op)) {
      occupy({g->p1, g->p2}, dur.local_gate);
      singles(g->after);
    } else if (const auto* s = std::get_if<SwapStep>(&op)) {
      occupy({s->p1, s->p2}, dur.swap);
    } else if (const auto* t = std::get_if<TeledataStep>(&op)) {
      occupy({t->src_data, t->src_comm, t->dst_comm}, dur.teledata);
    } else {
      const auto& tg = std::get<TelegateStep>(op);
      occupy({tg.p1, tg.p2, tg.comm1, tg.comm2}, dur.telegate);
      singles(tg.after);
    }
  }
  return depth;
}

namespace {

json singles_to_json(const std::vector<SingleQubitOp>& ops) {
  json out = json::array();
  for (const auto& s : ops)
    out.push_back({{"kind", s.kind}, {"logical", s.logical}, {"physical", s.physical}});
  return out;
}

std::vector<SingleQubitOp> singles_from_json(const json& j) {
  std::vector<SingleQubitOp> out;
  for (const auto& s : j)
    out.push_back({s.at("kind").get<std::string>(), s.at("logical").get<int>(),
                   s.at("physical").get<int>()});
  return out;
}

json to_json(const Schedule& schedule, const Durations& durations) {
  json ops = json::array();
  for (std::size_t i = 0; i < schedule.ops.size(); ++i) {
    const auto& op = schedule.ops[i];
    json j{{"seq", i}};
    if (const auto* g = std::get_if<LocalGateStep>(&op)) {
      j["type"] = "gate";
      j["gate"] = g->gate;
      j["qubits"] = {g->p1, g->p2};
      j["after"] = singles_to_json(g->after);
    } else if (const auto* s = std::get_if<SwapStep>(&op)) {
      j["type"] = "swap";
      j["qubits"] = {s->p1, s->p2};
    } else if (const auto* t = std::get_if<TeledataStep>(&op)) {
      j["type"] = "teledata";
      j["logical"] = t->qubit;
      j["src_data"] = t->src_data;
      j["src_comm"] = t->src_comm;
      j["dst_comm"] = t->dst_comm;
    } else {
      const auto& tg = std::get<TelegateStep>(op);
      j["type"] = "telegate";
      j["gate"] = tg.gate;
      j["qubits"] = {tg.p1, tg.p2};
      j["comm"] = {tg.comm1, tg.comm2};
      j["after"] = singles_to_json(tg.after);
    }
    ops.push_back(std::move(j));
  }
  const auto c = schedule.counts();
  return json{{"num_physical", schedule.num_physical},
              {"initial_layout", schedule.initial_layout},
              {"final_layout", schedule.final_layout},
              {"prologue", singles_to_json(schedule.prologue)},
              {"ops", std::move(ops)},
              {"metrics",
               {{"swaps", c.swaps},
                {"teledata", c.teledata},
                {"telegate", c.telegate},
                {"intercore", c.intercore()},
                {"local_gates", c.local_gates},
                {"depth", compute_depth(schedule, durations)}}}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void annotate_singles(std::ostringstream& out, const std::vector<SingleQubitOp>& ops) {
  for (const auto& s : ops)
    out << "      " << s.kind << " p" << s.physical << "  (q" << s.logical << ")\n";
}

std::string annotated_text(const Schedule& schedule) {
  std::ostringstream out;
  out << "# initial layout:";
  for (std::size_t q = 0; q < schedule.initial_layout.size(); ++q)
    out << " q" << q << "->p" << schedule.initial_layout[q];
  out << "\n";
  if (!schedule.prologue.empty()) {
    out << "# prologue\n";
    annotate_singles(out, schedule.prologue);
  }
  for (std::size_t i = 0; i < schedule.ops.size(); ++i) {
    const auto& op = schedule.ops[i];
    out << "[" << i << "] ";
    if (const auto* g = std::get_if<LocalGateStep>(&op)) {
      out << "gate " << g->gate << " on p" << g->p1 << " p" << g->p2 << "\n";
      annotate_singles(out, g->after);
    } else if (const auto* s = std::get_if<SwapStep>(&op)) {
      out << "swap p" << s->p1 << " p" << s->p2 << "\n";
    } else if (const auto* t = std::get_if<TeledataStep>(&op)) {
      out << "teledata q" << t->qubit << ": p" << t->src_data << " via p" << t->src_comm
          << " -> p" << t->dst_comm << "\n"
          << "    # entangle: Bell pair on p" << t->src_comm << " (source) and p" << t->dst_comm
          << " (destination)\n"
          << "    # pre-process: CX p" << t->src_data << " -> p" << t->src_comm << "; H p"
          << t->src_data << "\n"
          << "    # measure p" << t->src_data << ", p" << t->src_comm
          << "; classical send of 2 bits to the destination core\n"
          << "    # correct: X on p" << t->dst_comm << " if m(p" << t->src_comm
          << ")=1; Z on p" << t->dst_comm << " if m(p" << t->src_data << ")=1\n";
    } else {
      const auto& tg = std::get<TelegateStep>(op);
      out << "telegate " << tg.gate << ": p" << tg.p1 << " ~ p" << tg.p2 << " via p" << tg.comm1
          << " <-> p" << tg.comm2 << "\n"
          << "    # entangle: Bell pair on p" << tg.comm1 << " and p" << tg.comm2 << "\n"
          << "    # local: CX p" << tg.p1 << " -> p" << tg.comm1 << " (control core); CX p"
          << tg.comm2 << " -> p" << tg.p2 << "; H p" << tg.comm2 << " (target core)\n"
          << "    # measure p" << tg.comm1 << ", p" << tg.comm2 << "; classical exchange\n"
          << "    # correct: Z on p" << tg.p1 << " if m(p" << tg.comm2 << ")=1; X on p" << tg.p2
          << " if m(p" << tg.comm1 << ")=1\n";
      annotate_singles(out, tg.after);
    }
  }
  const auto c = schedule.counts();
  out << "# swaps=" << c.swaps << " teledata=" << c.teledata << " telegate=" << c.telegate
      << " depth=" << compute_depth(schedule) << "\n";
  return out.str();
}

}  // namespace

std::string csv_header() {
  return "circuit,arch,seed,swaps,teledata,telegate,intercore_total,depth,runtime_ms\n";
}

std::string emit(const Schedule& schedule, EmitFormat format, const RunInfo& info,
                 const Durations& durations) {
  switch (format) {
    case EmitFormat::json:
      return to_json(schedule, durations).dump(2) + "\n";
    case EmitFormat::csv_summary: {
      const auto c = schedule.counts();
      std::ostringstream out;
      out << csv_field(info.circuit) << ',' << csv_field(info.arch) << ',' << info.seed << ','
          << c.swaps << ',' << c.teledata << ',' << c.telegate << ',' << c.intercore() << ','
          << compute_depth(schedule, durations) << ',' << std::fixed << std::setprecision(3)
          << info.runtime_ms << "\n";
      return out.str();
    }
    case EmitFormat::annotated_text:
      return annotated_text(schedule);
  }
  return {};
}

Schedule schedule_from_json(std::string_view text) {
  try {
    const auto doc = json::parse(text);
    Schedule s;
    s.num_physical = doc.at("num_physical").get<int>();
    s.initial_layout = doc.at("initial_layout").get<std::vector<int>>();
    s.final_layout = doc.at("final_layout").get<std::vector<int>>();
    s.prologue = singles_from_json(doc.at("prologue"));
    for (const auto& j : doc.at("ops")) {
      const auto type = j.at("type").get<std::string>();
      if (type == "gate") {
        const auto q = j.at("qubits").get<std::vector<int>>();
        s.ops.emplace_back(LocalGateStep{j.at("gate").get<int>(), q.at(0), q.at(1),
                                         singles_from_json(j.at("after"))});
      } else if (type == "swap") {
        const auto q = j.at("qubits").get<std::vector<int>>();
        s.ops.emplace_back(SwapStep{q.at(0), q.at(1)});
      } else if (type == "teledata") {
        s.ops.emplace_back(TeledataStep{j.at("logical").get<int>(), j.at("src_data").get<int>(),
                                        j.at("src_comm").get<int>(), j.at("dst_comm").get<int>()});
      } else if (type == "telegate") {
        const auto q = j.at("qubits").get<std::vector<int>>();
        const auto c = j.at("comm").get<std::vector<int>>();
        s.ops.emplace_back(TelegateStep{j.at("gate").get<int>(), q.at(0), q.at(1), c.at(0),
                                        c.at(1), singles_from_json(j.at("after"))});
      } else {
        throw std::runtime_error("unknown op type '" + type + "'");
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("schedule JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::runtime_error(std::string("schedule JSON: ") + e.what());
  }
}

}  // namespace mcroute
