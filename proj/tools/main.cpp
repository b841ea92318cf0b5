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

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gridsynth/cli.hpp"

int main(int argc, char** argv) {
  using namespace gridsynth;

  CLI::App app{"gridsynth: object-graph program synthesis for ARC-style grid tasks"};
  RunConfig config;
  std::vector<std::string> taskFiles;
  std::string tasksDir;
  std::string abstractions = "connected,vertical";
  std::string strategy = "best-first";
  std::string render = "none";
  std::string outDir = ".";
  bool noCa = false;
  bool noTabu = false;
  bool noHash = false;
  bool noTiming = false;

  auto* taskOpt = app.add_option("--task", taskFiles, "Task JSON file (repeatable)");
  auto* dirOpt = app.add_option("--tasks-dir", tasksDir, "Directory of task JSON files")
                     ->check(CLI::ExistingDirectory);
  taskOpt->excludes(dirOpt);
  app.add_option("--time-limit", config.solver.timeLimitSeconds, "Seconds per task")
      ->check(CLI::PositiveNumber);
  app.add_option("--node-limit", config.solver.nodeLimit, "Explored nodes per task")
      ->check(CLI::PositiveNumber);
  app.add_option("--depth", config.solver.maxDepth, "Maximum program length")
      ->check(CLI::PositiveNumber);
  app.add_option("--abstractions", abstractions, "Comma-separated abstraction list");
  app.add_flag("--no-ca", noCa, "Disable constraint acquisition");
  app.add_flag("--no-tabu", noTabu, "Disable the tabu list");
  app.add_flag("--no-hash", noHash, "Disable state hashing");
  app.add_option("--strategy", strategy, "Frontier order")
      ->check(CLI::IsMember({"best-first", "bfs"}));
  app.add_option("--render", render, "Render predictions")
      ->check(CLI::IsMember({"none", "ascii", "image"}));
  app.add_option("--out", outDir, "Output directory");
  app.add_flag("--no-timing", noTiming, "Omit timing fields from stats.json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!tasksDir.empty()) {
      config.tasks = listTaskFiles(tasksDir);
    } else {
      config.tasks.assign(taskFiles.begin(), taskFiles.end());
    }
    config.solver.abstractions.clear();
    std::stringstream list(abstractions);
    for (std::string name; std::getline(list, name, ',');) {
      if (name.empty()) continue;
      auto kind = abstractionFromName(name);
      if (!kind) throw std::invalid_argument("unknown abstraction \"" + name + "\"");
      config.solver.abstractions.push_back(*kind);
    }
    config.solver.useConstraints = !noCa;
    config.solver.useTabu = !noTabu;
    config.solver.useHashing = !noHash;
    config.solver.strategy =
        strategy == "bfs" ? SearchStrategy::kBreadthFirst : SearchStrategy::kBestFirst;
    if (render == "ascii") config.render = RenderMode::kAscii;
    if (render == "image") config.render = RenderMode::kImage;
    config.outDir = outDir;
    config.recordTiming = !noTiming;
    return runSolve(config, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "gridsynth: " << e.what() << "\n";
    return 2;
  }
}
