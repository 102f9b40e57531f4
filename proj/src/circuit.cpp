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

#include "mcroute/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "mcroute/errors.hpp"

namespace mcroute {

CircuitDag::CircuitDag(int num_qubits)
    : num_qubits_(num_qubits),
      last_on_qubit_(static_cast<std::size_t>(num_qubits), -1) {
  if (num_qubits < 0) throw PreconditionError("negative qubit count");
}

GateId CircuitDag::add_gate(std::string kind, int a, int b) {
  if (a < 0 || b < 0 || a >= num_qubits_ || b >= num_qubits_)
    throw PreconditionError("gate qubit out of range");
  if (a == b) throw PreconditionError("two-qubit gate on a single qubit");
  const auto id = static_cast<GateId>(gates_.size());
  Gate g;
  g.id = id;
  g.kind = std::move(kind);
  g.qubits = {a, b};
  for (int q : {a, b}) {
    const GateId prev = last_on_qubit_[static_cast<std::size_t>(q)];
    if (prev >= 0 && std::find(g.predecessors.begin(), g.predecessors.end(),
                               prev) == g.predecessors.end()) {
      g.predecessors.push_back(prev);
      gates_[static_cast<std::size_t>(prev)].successors.push_back(id);
    }
    last_on_qubit_[static_cast<std::size_t>(q)] = id;
  }
  std::sort(g.predecessors.begin(), g.predecessors.end());
  pending_preds_.push_back(static_cast<int>(g.predecessors.size()));
  executed_.push_back(0);
  if (g.predecessors.empty()) front_.insert(id);
  gates_.push_back(std::move(g));
  return id;
}

void CircuitDag::add_single(std::string kind, int qubit) {
  if (qubit < 0 || qubit >= num_qubits_)
    throw PreconditionError("gate qubit out of range");
  const GateId prev = last_on_qubit_[static_cast<std::size_t>(qubit)];
  Annotation ann{std::move(kind), qubit};
  if (prev < 0)
    prologue_.push_back(std::move(ann));
  else
    gates_[static_cast<std::size_t>(prev)].trailing.push_back(std::move(ann));
}

std::vector<GateId> CircuitDag::execute(GateId id) {
  if (!in_front(id))
    throw PreconditionError("gate " + std::to_string(id) + " is not in the front layer");
  front_.erase(id);
  executed_[static_cast<std::size_t>(id)] = 1;
  ++num_executed_;
  std::vector<GateId> ready;
  for (GateId s : gates_[static_cast<std::size_t>(id)].successors) {
    if (--pending_preds_[static_cast<std::size_t>(s)] == 0) {
      front_.insert(s);
      ready.push_back(s);
    }
  }
  std::sort(ready.begin(), ready.end());
  return ready;
}

std::vector<GateId> CircuitDag::extended_set(std::size_t size) const {
  std::vector<GateId> out;
  if (size == 0) return out;
  std::vector<char> seen(gates_.size(), 0);
  std::deque<GateId> queue;
  for (GateId g : front_) {
    seen[static_cast<std::size_t>(g)] = 1;
    queue.push_back(g);
  }
  while (!queue.empty() && out.size() < size) {
    const GateId g = queue.front();
    queue.pop_front();
    std::vector<GateId> succ = gates_[static_cast<std::size_t>(g)].successors;
    std::sort(succ.begin(), succ.end());
    for (GateId s : succ) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      seen[static_cast<std::size_t>(s)] = 1;
      out.push_back(s);
      if (out.size() == size) break;
      queue.push_back(s);
    }
  }
  return out;
}

void CircuitDag::reset() {
  front_.clear();
  num_executed_ = 0;
  for (auto& g : gates_) {
    const auto i = static_cast<std::size_t>(g.id);
    executed_[i] = 0;
    pending_preds_[i] = static_cast<int>(g.predecessors.size());
    if (g.predecessors.empty()) front_.insert(g.id);
  }
}

CircuitDag reverse(const CircuitDag& dag) {
  CircuitDag out = dag;
  for (auto& g : out.gates_) std::swap(g.predecessors, g.successors);
  for (auto& g : out.gates_) std::sort(g.successors.begin(), g.successors.end());
  out.reset();
  return out;
}

namespace {

/// Character cursor over the QASM source that knows line/column.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_' || text_[pos_] == '.'))
      advance();
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      advance();
    if (start == pos_) fail("expected integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  /// Skips balanced text up to (and including) `close`, starting after `open`.
  void skip_balanced(char open, char close) {
    int depth = 1;
    while (pos_ < text_.size() && depth > 0) {
      if (text_[pos_] == open) ++depth;
      if (text_[pos_] == close) --depth;
      advance();
    }
    if (depth != 0) fail(std::string("unterminated '") + open + "'");
  }

  /// Skips a `gate name(...) args { body }` or `opaque ...;` definition.
  void skip_definition() {
    while (pos_ < text_.size() && text_[pos_] != '{' && text_[pos_] != ';') advance();
    if (pos_ >= text_.size()) fail("unterminated definition");
    const bool block = text_[pos_] == '{';
    advance();
    if (block) skip_balanced('{', '}');
  }

  void skip_statement() {
    while (pos_ < text_.size() && text_[pos_] != ';') advance();
    if (pos_ >= text_.size()) fail("missing ';'");
    advance();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_);
  }

  int line() const { return line_; }
  int column() const { return column_; }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct Operand {
  std::string reg;
  std::optional<int> index;
  int line = 0;
  int column = 0;
};

struct PendingGate {
  std::string name;
  std::vector<Operand> args;
  int line = 0;
  int column = 0;
};

CircuitDag parse_qasm(std::string_view text) {
  Scanner sc(text);
  std::map<std::string, std::pair<int, int>> qregs;  // name -> (offset, size)
  int declared = 0;
  std::vector<PendingGate> pending;

  while (!sc.at_end()) {
    const int line = sc.line();
    const int col = sc.column();
    const std::string word = sc.identifier();
    if (word == "OPENQASM" || word == "include" || word == "creg" ||
        word == "measure" || word == "barrier" || word == "reset") {
      sc.skip_statement();
      continue;
    }
    if (word == "gate" || word == "opaque") {
      sc.skip_definition();
      continue;
    }
    if (word == "if") sc.fail("classically controlled gates are not supported");
    if (word == "qreg") {
      const std::string name = sc.identifier();
      sc.expect('[');
      const int size = sc.integer();
      sc.expect(']');
      sc.expect(';');
      if (qregs.count(name)) throw ParseError("duplicate qreg '" + name + "'", line, col);
      qregs[name] = {declared, size};
      declared += size;
      continue;
    }
    PendingGate g{word, {}, line, col};
    if (sc.accept('(')) sc.skip_balanced('(', ')');
    do {
      Operand op;
      sc.skip_space();
      op.line = sc.line();
      op.column = sc.column();
      op.reg = sc.identifier();
      if (sc.accept('[')) {
        op.index = sc.integer();
        sc.expect(']');
      }
      g.args.push_back(std::move(op));
    } while (sc.accept(','));
    sc.expect(';');
    if (g.args.size() >= 3)
      throw UnsupportedGateError("gate '" + g.name + "' acts on " +
                                     std::to_string(g.args.size()) + " qubits",
                                 line, col);
    pending.push_back(std::move(g));
  }

  // Bare operands like `q3` form an implicit register after the declared ones.
  int implicit_max = -1;
  auto resolve = [&](const Operand& op) -> int {
    if (auto it = qregs.find(op.reg); it != qregs.end()) {
      if (!op.index)
        throw ParseError("register operand '" + op.reg + "' needs an index",
                         op.line, op.column);
      if (*op.index < 0 || *op.index >= it->second.second)
        throw ParseError("index out of range for '" + op.reg + "'", op.line, op.column);
      return it->second.first + *op.index;
    }
    if (op.index) throw ParseError("undeclared register '" + op.reg + "'", op.line, op.column);
    std::size_t k = op.reg.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(op.reg[k - 1]))) --k;
    if (k == op.reg.size())
      throw ParseError("cannot resolve qubit '" + op.reg + "'", op.line, op.column);
    const int idx = std::stoi(op.reg.substr(k));
    implicit_max = std::max(implicit_max, idx);
    return declared + idx;
  };

  std::vector<std::vector<int>> resolved;
  resolved.reserve(pending.size());
  for (const auto& g : pending) {
    std::vector<int> qs;
    for (const auto& op : g.args) qs.push_back(resolve(op));
    if (qs.size() == 2 && qs[0] == qs[1])
      throw ParseError("two-qubit gate '" + g.name + "' repeats a qubit", g.line, g.column);
    resolved.push_back(std::move(qs));
  }

  CircuitDag dag(declared + implicit_max + 1);
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const auto& qs = resolved[i];
    if (qs.size() == 2)
      dag.add_gate(pending[i].name, qs[0], qs[1]);
    else if (qs.size() == 1)
      dag.add_single(pending[i].name, qs[0]);
  }
  return dag;
}

CircuitDag parse_gate_list(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; convert to line/column.
    const std::size_t at = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("invalid JSON", line, col);
  }
  try {
    CircuitDag dag(doc.at("num_qubits").get<int>());
    for (const auto& g : doc.at("gates")) {
      const auto kind = g.at("kind").get<std::string>();
      const auto qubits = g.at("qubits").get<std::vector<int>>();
      if (qubits.size() >= 3)
        throw UnsupportedGateError("gate '" + kind + "' acts on " +
                                       std::to_string(qubits.size()) + " qubits",
                                   1, 1);
      if (qubits.size() == 2)
        dag.add_gate(kind, qubits[0], qubits[1]);
      else if (qubits.size() == 1)
        dag.add_single(kind, qubits[0]);
      else
        throw ParseError("gate '" + kind + "' has no qubits", 1, 1);
    }
    return dag;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("gate list schema: ") + e.what(), 1, 1);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace

CircuitDag parse_circuit(std::string_view text, CircuitFormat format) {
  return format == CircuitFormat::qasm ? parse_qasm(text) : parse_gate_list(text);
}

CircuitDag load_circuit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const auto format =
      path.extension() == ".json" ? CircuitFormat::gate_list : CircuitFormat::qasm;
  return parse_circuit(buf.str(), format);
}

std::string to_gate_list_json(const CircuitDag& dag) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& a : dag.prologue())
    gates.push_back({{"kind", a.kind}, {"qubits", {a.qubit}}});
  for (const auto& g : dag.gates()) {
    gates.push_back({{"kind", g.kind}, {"qubits", {g.qubits[0], g.qubits[1]}}});
    for (const auto& a : g.trailing)
      gates.push_back({{"kind", a.kind}, {"qubits", {a.qubit}}});
  }
  nlohmann::json doc{{"num_qubits", dag.num_qubits()}, {"gates", std::move(gates)}};
  return doc.dump();
}

}  // namespace mcroute
