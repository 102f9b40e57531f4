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

#include "mcroute/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string_view>

namespace mcroute::log {

Level threshold() {
  static const Level level = [] {
    const char* env = std::getenv("TELESABRE_LOG");
    const std::string_view v = env ? env : "";
    if (v == "error") return Level::error;
    if (v == "info") return Level::info;
    if (v == "debug") return Level::debug;
    return Level::warn;
  }();
  return level;
}

void write(Level level, const std::string& message) {
  if (!enabled(level)) return;
  static constexpr const char* names[] = {"error", "warn", "info", "debug"};
  std::clog << "[" << names[static_cast<int>(level)] << "] " << message << '\n';
}

}  // namespace mcroute::log
