// Copyright 2026 The tgrad Authors
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

#include <cstdint>
#include <cstdlib>
#include <string>

namespace tgrad {

// Knobs shared by every exhaustive search in the library.
struct SearchLimits {
  // Upper bound on search-tree nodes before a search gives up.
  std::uint64_t node_budget = 200'000'000;
  // Host graphs with at most this many vertices are searched exhaustively.
  std::size_t exhaustive_bound = 12;
  // Worker threads for searches that fan out; results never depend on it.
  std::size_t workers = 1;
};

// Worker count from the TGRAD_WORKERS environment variable, else 1.
inline std::size_t default_worker_count() {
  if (const char* env = std::getenv("TGRAD_WORKERS")) {
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return 1;
}

inline SearchLimits default_limits() {
  SearchLimits limits;
  limits.workers = default_worker_count();
  return limits;
}

}  // namespace tgrad
