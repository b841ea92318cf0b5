// Copyright 2026 The gridsynth Authors. All rights reserved.
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
#include <optional>
#include <ostream>
#include <vector>

#include "gridsynth/render.hpp"
#include "gridsynth/search.hpp"
#include "json.hpp"

namespace gridsynth {

struct RunConfig {
  std::vector<std::filesystem::path> tasks;
  std::filesystem::path outDir = ".";
  SolverConfig solver;
  std::optional<RenderMode> render;
  // Whether the "seconds" field is written into stats.json.
  bool recordTiming = true;

  /// Throws std::invalid_argument on empty task list, zero budgets or no
  /// abstraction.
  void validate() const;
};

/// Sorted *.json files directly inside `dir`.
std::vector<std::filesystem::path> listTaskFiles(const std::filesystem::path& dir);

/// Per-abstraction map from filter key to constraint names.
nlohmann::json acquiredToJson(const std::map<AbstractionKind, AcquiredConstraintSet>& acquired);

/// Solves every task in order, writing outputs under config.outDir. stats.json
/// is rewritten after each task. Returns 0 when every task was loaded and
/// searched, 1 otherwise.
int runSolve(const RunConfig& config, std::ostream& log);

}  // namespace gridsynth
