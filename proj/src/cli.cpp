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

#include "gridsynth/cli.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "gridsynth/program_io.hpp"
#include "gridsynth/task_io.hpp"

namespace gridsynth {

namespace fs = std::filesystem;
using nlohmann::json;

void RunConfig::validate() const {
  if (tasks.empty()) throw std::invalid_argument("no task given");
  if (solver.nodeLimit == 0) throw std::invalid_argument("node limit must be positive");
  if (!(solver.timeLimitSeconds > 0)) throw std::invalid_argument("time limit must be positive");
  if (solver.maxDepth == 0) throw std::invalid_argument("depth must be positive");
  if (solver.abstractions.empty()) throw std::invalid_argument("no abstraction enabled");
}

std::vector<fs::path> listTaskFiles(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

json acquiredToJson(const std::map<AbstractionKind, AcquiredConstraintSet>& acquired) {
  json out = json::object();
  for (const auto& [kind, set] : acquired) {
    json filters = json::object();
    for (const auto& [key, entry] : set.entries()) {
      json names = json::array();
      for (auto c : entry.kinds) names.push_back(std::string(constraintName(c)));
      filters[key] = std::move(names);
    }
    out[std::string(abstractionName(kind))] = std::move(filters);
  }
  return out;
}

namespace {

void writeFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
}

void writeAtomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  writeFile(tmp, content);
  fs::rename(tmp, path);
}

bool predictionsMatch(const Task& task, const SolveResult& result) {
  if (result.predictions.size() != task.test.size()) return false;
  for (std::size_t i = 0; i < task.test.size(); ++i) {
    if (task.test[i].output && *task.test[i].output != result.predictions[i]) return false;
  }
  return true;
}

void emitRenders(const fs::path& base, const std::vector<Grid>& grids, RenderMode mode) {
  for (std::size_t i = 0; i < grids.size(); ++i) {
    fs::path path = base;
    path += ".test" + std::to_string(i) + (mode == RenderMode::kAscii ? ".txt" : ".ppm");
    writeFile(path, renderGrid(grids[i], mode));
  }
}

}  // namespace

int runSolve(const RunConfig& config, std::ostream& log) {
  config.validate();
  fs::create_directories(config.outDir);
  const fs::path statsPath = config.outDir / "stats.json";

  json records = json::array();
  writeAtomically(statsPath, records.dump(2) + "\n");
  int status = 0;

  for (const auto& taskPath : config.tasks) {
    const std::string name = taskPath.stem().string();
    json record = {{"task", name},
                   {"solved", false},
                   {"trainSolved", false},
                   {"nodesExplored", 0},
                   {"programLength", 0},
                   {"acquiredConstraints", json::object()}};
    if (config.recordTiming) record["seconds"] = 0.0;
    try {
      const Task task = loadTask(taskPath);
      const SolveResult result = solve(task, config.solver);
      const fs::path base = config.outDir / name;

      const bool trainSolved = result.program.has_value();
      record["trainSolved"] = trainSolved;
      record["solved"] = trainSolved && predictionsMatch(task, result);
      record["nodesExplored"] = result.stats.nodesExplored;
      record["programLength"] = result.stats.programLength;
      record["acquiredConstraints"] = acquiredToJson(result.acquired);
      if (config.recordTiming) record["seconds"] = result.stats.elapsedSeconds;

      if (result.program) {
        fs::path programPath = base;
        programPath += ".program.json";
        writeFile(programPath, serializeProgram(*result.program) + "\n");
        json predictions = json::array();
        for (const auto& g : result.predictions) predictions.push_back(gridToJson(g));
        fs::path predictionPath = base;
        predictionPath += ".prediction.json";
        writeFile(predictionPath, predictions.dump() + "\n");
        if (config.render) emitRenders(base, result.predictions, *config.render);
      }
      log << name << ": " << (record["solved"].get<bool>() ? "solved" : "unsolved") << " ("
          << result.stats.nodesExplored << " nodes)\n";
    } catch (const std::exception& e) {
      record["error"] = e.what();
      status = 1;
      log << name << ": error: " << e.what() << "\n";
    }
    records.push_back(std::move(record));
    writeAtomically(statsPath, records.dump(2) + "\n");
  }
  return status;
}

}  // namespace gridsynth
