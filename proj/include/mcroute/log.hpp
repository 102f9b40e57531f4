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

#include <string>
#include <utility>

// Minimal stderr logging. Verbosity comes from TELESABRE_LOG
// (error, warn, info, debug; default warn).
namespace mcroute::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

Level threshold();
void write(Level level, const std::string& message);

inline bool enabled(Level level) { return static_cast<int>(level) <= static_cast<int>(threshold()); }

inline void error(const std::string& m) { write(Level::error, m); }
inline void warn(const std::string& m) { write(Level::warn, m); }
inline void info(const std::string& m) { write(Level::info, m); }

/// Lazily formatted: `make` only runs when debug output is on.
template <typename F>
void debug(F&& make) {
  if (enabled(Level::debug)) write(Level::debug, std::forward<F>(make)());
}

}  // namespace mcroute::log
