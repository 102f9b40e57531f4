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

#include <stdexcept>
#include <string>
#include <vector>

namespace mcroute {

/// Malformed circuit text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(format(what, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

/// A gate acting on three or more qubits.
class UnsupportedGateError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Architecture descriptor that violates a structural invariant.
class ArchitectureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an operation's precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The circuit cannot be placed on the device (too many logical qubits).
class InfeasibleInstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Snapshot of a stuck routing run.
struct DeadlockInfo {
  std::vector<int> blocked_gates;
  std::vector<int> full_cores;
  std::vector<int> layout;  // logical -> physical at the point of failure
  int stalled_ops = 0;
  std::string reason;
};

class DeadlockError : public std::runtime_error {
 public:
  explicit DeadlockError(DeadlockInfo info)
      : std::runtime_error(describe(info)), info_(std::move(info)) {}

  const DeadlockInfo& info() const { return info_; }

 private:
  static std::string describe(const DeadlockInfo& info) {
    std::string s = "deadlock: " + info.reason + "; blocked gates [";
    for (std::size_t i = 0; i < info.blocked_gates.size(); ++i)
      s += (i ? "," : "") + std::to_string(info.blocked_gates[i]);
    s += "]; full cores [";
    for (std::size_t i = 0; i < info.full_cores.size(); ++i)
      s += (i ? "," : "") + std::to_string(info.full_cores[i]);
    return s + "]";
  }

  DeadlockInfo info_;
};

}  // namespace mcroute
