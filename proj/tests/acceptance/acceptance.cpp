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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gridsynth/cli.hpp"
#include "gridsynth/search.hpp"
#include "pixel_oracle.hpp"

using namespace gridsynth;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double kFixtureSeconds = 10.0;
constexpr std::size_t kFixtureNodes = 20000;
constexpr int kRoundTripGrids = 1000;
constexpr int kRoundTripMaxDim = 10;
constexpr int kRoundTripColors = 5;
constexpr double kPairedRunSeconds = 120.0;
constexpr int kOracleMaxDim = 3;

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<fs::path> fixtures() { return listTaskFiles(GRIDSYNTH_FIXTURE_DIR); }

double secondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool exact(const Task& task, const SolveResult& r) {
  if (!r.program) return false;
  for (const auto& ex : task.train) {
    if (applyProgram(*r.program, ex.input) != ex.output) return false;
  }
  if (r.predictions.size() != task.test.size()) return false;
  for (std::size_t i = 0; i < task.test.size(); ++i) {
    if (!task.test[i].output || *task.test[i].output != r.predictions[i]) return false;
  }
  return true;
}

Outcome fixtureSuite() {
  std::ostringstream detail;
  bool pass = !fixtures().empty();
  for (const auto& path : fixtures()) {
    const Task task = loadTask(path);
    const auto start = std::chrono::steady_clock::now();
    const auto result = solve(task, SolverConfig{});
    const double seconds = secondsSince(start);
    const bool ok = exact(task, result) && seconds <= kFixtureSeconds &&
                    result.stats.nodesExplored <= kFixtureNodes;
    pass = pass && ok;
    detail << path.stem().string() << "=" << (ok ? "ok" : "FAILED") << "("
           << result.stats.nodesExplored << " nodes, " << seconds << "s) ";
  }
  return {pass, detail.str()};
}

Outcome heuristicTable() {
  // (actual, predicted, expected penalty) with background 0.
  const struct {
    int actual, predicted, penalty;
  } cases[] = {{0, 3, 2}, {3, 0, 2}, {3, 4, 1}, {3, 3, 0}, {0, 0, 0}};
  bool pass = true;
  std::ostringstream detail;
  for (const auto& c : cases) {
    std::vector<ObjectNode> nodes;
    if (c.predicted != 0) nodes.push_back(ObjectNode{0, Color{c.predicted}, {{0, 0}}});
    std::vector<AbstractedGraph> graphs = {
        AbstractedGraph(AbstractionKind::kConnected, 1, 1, Color{0}, nodes)};
    std::vector<Grid> outputs = {Grid(1, 1, Color{c.actual})};
    const int got = scoreGraphs(graphs, outputs);
    pass = pass && got == c.penalty;
    detail << got << (&c == &cases[4] ? "" : "/");
  }
  return {pass, "penalties " + detail.str() + " (expected 2/2/1/0/0)"};
}

Outcome roundTrip() {
  std::mt19937 rng(20261014);
  int failures = 0;
  for (int i = 0; i < kRoundTripGrids; ++i) {
    const int h = 1 + static_cast<int>(rng() % kRoundTripMaxDim);
    const int w = 1 + static_cast<int>(rng() % kRoundTripMaxDim);
    const int colors = 1 + static_cast<int>(rng() % kRoundTripColors);
    std::vector<int> palette(kNumColors);
    for (int c = 0; c < kNumColors; ++c) palette[c] = c;
    std::shuffle(palette.begin(), palette.end(), rng);
    Grid grid(h, w);
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < w; ++c) grid.set({r, c}, Color{palette[rng() % colors]});
    for (auto kind : kAllAbstractions) {
      const auto g = abstractGrid(grid, kind);
      bool ok = reconstruct(g) == grid;
      std::set<Pixel> covered;
      std::size_t total = 0;
      for (const auto& n : g.nodes()) {
        for (const auto& p : n.pixels) {
          ok = ok && grid.contains(p) && grid.at(p) == n.color && n.color != g.background();
          covered.insert(p);
          ++total;
        }
      }
      std::size_t foreground = 0;
      for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) foreground += grid.at(r, c) != g.background();
      ok = ok && covered.size() == total && total == foreground;
      failures += !ok;
    }
  }
  return {failures == 0, std::to_string(kRoundTripGrids) + " grids x 2 kinds, " +
                             std::to_string(failures) + " failures"};
}

Outcome constraintAcquisition() {
  const auto start = std::chrono::steady_clock::now();
  bool sound = true;
  bool monotone = true;
  bool strict = false;
  std::ostringstream detail;
  for (const auto& path : fixtures()) {
    const Task task = loadTask(path);
    SolverConfig on;
    SolverConfig off;
    off.useConstraints = false;
    const auto withCa = solve(task, on);
    const auto withoutCa = solve(task, off);

    for (const auto& [kind, set] : withCa.acquired) {
      for (const auto& [key, entry] : set.entries()) {
        for (const auto& ex : task.train) {
          auto pairs = pairNodes(abstractGrid(ex.input, kind), abstractGrid(ex.output, kind),
                                 entry.filter);
          if (!pairs) {
            sound = false;
            continue;
          }
          for (const auto& [before, after] : *pairs)
            for (auto c : entry.kinds) sound = sound && checkConstraint(c, before, after);
        }
      }
    }
    monotone = monotone && withCa.stats.nodesExplored <= withoutCa.stats.nodesExplored;
    strict = strict || withCa.stats.nodesExplored < withoutCa.stats.nodesExplored;
    detail << path.stem().string() << "=" << withCa.stats.nodesExplored << "/"
           << withoutCa.stats.nodesExplored << " ";
  }
  const double seconds = secondsSince(start);
  detail << "(CA on/off nodes), sound=" << sound << ", " << seconds << "s";
  return {sound && monotone && strict && seconds < kPairedRunSeconds, detail.str()};
}

Outcome hashing() {
  bool monotone = true;
  bool strict = false;
  std::ostringstream detail;
  for (const auto& path : fixtures()) {
    const Task task = loadTask(path);
    SolverConfig off;
    off.useHashing = false;
    const auto on = solve(task, SolverConfig{});
    const auto without = solve(task, off);
    monotone = monotone && on.stats.nodesExplored <= without.stats.nodesExplored;
    strict = strict || on.stats.nodesExplored < without.stats.nodesExplored;
    detail << path.stem().string() << "=" << on.stats.nodesExplored << "/"
           << without.stats.nodesExplored << " ";
  }
  detail << "(hash on/off nodes)";
  return {monotone && strict, detail.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "gridsynth_acceptance_determinism";
  fs::remove_all(root);
  std::vector<fs::path> dirs = {root / "a", root / "b"};
  for (const auto& dir : dirs) {
    RunConfig config;
    config.tasks = fixtures();
    config.outDir = dir;
    config.recordTiming = false;
    std::ostringstream log;
    if (runSolve(config, log) != 0) return {false, "batch run failed"};
  }
  std::set<std::string> names;
  for (const auto& dir : dirs)
    for (const auto& e : fs::directory_iterator(dir)) names.insert(e.path().filename().string());
  int differing = 0;
  for (const auto& name : names) {
    const auto a = dirs[0] / name;
    const auto b = dirs[1] / name;
    if (!fs::exists(a) || !fs::exists(b) || slurp(a) != slurp(b)) ++differing;
  }
  fs::remove_all(root);
  return {differing == 0 && !names.empty(),
          std::to_string(names.size()) + " files compared, " + std::to_string(differing) +
              " differ"};
}

Outcome oracleEquivalence() {
  // Operation fragment: filters all, color 0/1, size 1/2; recolor to 0/1/2
  // and move in the four cardinal directions, all with constant arguments.
  struct Op {
    FullOperation op;
    oracle::Step step;
  };
  using S = oracle::Step;
  std::vector<std::pair<FilterExpr, std::pair<S::Filter, int>>> filters = {
      {FilterExpr::all(), {S::Filter::kAll, 0}},
      {FilterExpr::byColor(Color{0}), {S::Filter::kColor, 0}},
      {FilterExpr::byColor(Color{1}), {S::Filter::kColor, 1}},
      {FilterExpr::bySize(Size{1}), {S::Filter::kSize, 1}},
      {FilterExpr::bySize(Size{2}), {S::Filter::kSize, 2}}};
  std::vector<Op> ops;
  for (const auto& [f, of] : filters) {
    for (int c = 0; c < 3; ++c) {
      ops.push_back({{f, TransformStep::make(TransformKind::kUpdateColor,
                                             {ParamBinding::constant(Color{c})})},
                     {of.first, of.second, S::Action::kRecolor, c, 0, 0}});
    }
    for (auto d : kCardinalDirections) {
      const Pixel v = directionStep(d);
      ops.push_back({{f, TransformStep::make(TransformKind::kMove, {ParamBinding::constant(d)})},
                     {of.first, of.second, S::Action::kMove, 0, v.row, v.col}});
    }
  }

  std::vector<std::vector<const Op*>> programs;
  for (const auto& a : ops) programs.push_back({&a});
  for (const auto& a : ops)
    for (const auto& b : ops) programs.push_back({&a, &b});

  long long checked = 0;
  long long mismatches = 0;
  for (int h = 1; h <= kOracleMaxDim; ++h) {
    for (int w = 1; w <= kOracleMaxDim; ++w) {
      for (int bits = 0; bits < (1 << (h * w)); ++bits) {
        oracle::Rows rows(h, std::vector<int>(w));
        for (int i = 0; i < h * w; ++i) rows[i / w][i % w] = (bits >> i) & 1;
        const Grid grid = Grid::fromRows(rows);
        for (auto kind : kAllAbstractions) {
          const auto okind =
              kind == AbstractionKind::kConnected ? oracle::Kind::kConnected : oracle::Kind::kVertical;
          for (const auto& prog : programs) {
            Program p{kind, {}};
            std::vector<oracle::Step> steps;
            for (const auto* op : prog) {
              p.steps.push_back(op->op);
              steps.push_back(op->step);
            }
            ++checked;
            if (applyProgram(p, grid).toRows() != oracle::run(rows, okind, steps)) ++mismatches;
          }
        }
      }
    }
  }
  return {mismatches == 0 && checked > 0,
          std::to_string(checked) + " (grid, program) runs, " + std::to_string(mismatches) +
              " mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 fixture-suite", fixtureSuite},
      {"2 heuristic-table", heuristicTable},
      {"3 abstraction-round-trip", roundTrip},
      {"4 constraint-acquisition", constraintAcquisition},
      {"5 hashing-effect", hashing},
      {"6 determinism", determinism},
      {"7 oracle-equivalence", oracleEquivalence},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
