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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gridsynth/grid.hpp"
#include "json.hpp"

namespace gridsynth {

/// The document is not parseable JSON or lacks the expected structure.
class MalformedDocument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Example {
  Grid input;
  Grid output;
};

struct TestCase {
  Grid input;
  // Only ever used for final scoring.
  std::optional<Grid> output;
};

struct Task {
  std::vector<Example> train;
  std::vector<TestCase> test;
};

/// Parses an ARC task document. Throws MalformedDocument or InvalidGrid;
/// never returns a partially filled task.
Task parseTask(std::string_view text);

/// Reads and parses a task file. I/O failures surface as std::runtime_error.
Task loadTask(const std::filesystem::path& path);

Grid gridFromJson(const nlohmann::json& value);
nlohmann::json gridToJson(const Grid& grid);

/// Compact JSON 2-D array, e.g. `[[1,2],[3,4]]`.
std::string serializePrediction(const Grid& grid);

std::string serializeTask(const Task& task);

}  // namespace gridsynth
