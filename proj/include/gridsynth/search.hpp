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

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "gridsynth/abstraction.hpp"
#include "gridsynth/constraints.hpp"
#include "gridsynth/dsl.hpp"
#include "gridsynth/enumerate.hpp"
#include "gridsynth/task_io.hpp"

namespace gridsynth {

/// Pixel-wise comparison across grids of different shapes.
class DimensionMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Digest = std::uint64_t;

/// Penalty of one pixel: 2 when exactly one side is background, 1 for two
/// different foreground colors, 0 otherwise.
int pixelPenalty(Color actual, Color predicted, Color background);

int scoreGrid(const Grid& predicted, const Grid& actual, Color background);

/// Sum of scoreGrid(reconstruct(graphs[i]), outputs[i]) using each graph's
/// background. Throws DimensionMismatch.
int scoreGraphs(std::span<const AbstractedGraph> graphs, std::span<const Grid> outputs);

/// Id-free canonical digest. Stacking order is kept only where nodes overlap.
Digest hashGraph(const AbstractedGraph& graph);
Digest hashState(std::span<const AbstractedGraph> graphs);

struct SearchNode {
  AbstractionKind abstraction;
  std::vector<AbstractedGraph> graphs;
  std::vector<FullOperation> history;
  int score = 0;
  Digest digest = 0;
};

enum class SearchStrategy : std::uint8_t { kBestFirst, kBreadthFirst };

/// One heap per abstraction; pop() returns the global minimum over the
/// eligible abstractions. Keys are (score or depth, insertion sequence).
class Frontier {
 public:
  explicit Frontier(SearchStrategy strategy) : strategy_(strategy) {}

  void push(SearchNode node);
  std::optional<SearchNode> pop(const std::function<bool(AbstractionKind)>& eligible);
  std::optional<SearchNode> pop() {
    return pop([](AbstractionKind) { return true; });
  }

  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }
  bool hasNodes(AbstractionKind kind) const;

 private:
  struct Entry {
    int key;
    std::uint64_t sequence;
    SearchNode node;
  };
  // Min-heap order.
  static bool later(const Entry& a, const Entry& b) {
    return a.key != b.key ? a.key > b.key : a.sequence > b.sequence;
  }

  SearchStrategy strategy_;
  std::map<AbstractionKind, std::vector<Entry>> heaps_;
  std::uint64_t nextSequence_ = 0;
  std::size_t size_ = 0;
};

struct TabuConfig {
  std::size_t window = 5;
  int suspension = 10;
};

/// Suspends an abstraction whose best child score strictly increased over
/// the last `window` expansions.
class TabuState {
 public:
  TabuState(TabuConfig config, std::span<const AbstractionKind> abstractions);

  /// Records the best of `childScores` (ignored when empty). Returns true
  /// when this call suspended the abstraction.
  bool update(AbstractionKind kind, std::span<const int> childScores);
  bool isTabu(AbstractionKind kind) const;

  /// One expansion has elapsed.
  void tick();
  /// The abstraction has no nodes left and no longer counts as active.
  void retire(AbstractionKind kind);
  void release(AbstractionKind kind);

  const std::deque<int>& window(AbstractionKind kind) const { return slots_.at(kind).window; }

 private:
  struct Slot {
    std::deque<int> window;
    int suspendedFor = 0;
    bool retired = false;
  };
  bool active(const Slot& s) const { return !s.retired && s.suspendedFor == 0; }

  TabuConfig config_;
  std::map<AbstractionKind, Slot> slots_;
};

struct SolverConfig {
  std::size_t nodeLimit = 50000;
  double timeLimitSeconds = 300.0;
  std::size_t maxDepth = 4;
  std::vector<AbstractionKind> abstractions{kAllAbstractions.begin(), kAllAbstractions.end()};
  bool useConstraints = true;
  bool useTabu = true;
  bool useHashing = true;
  SearchStrategy strategy = SearchStrategy::kBestFirst;
  TabuConfig tabu;
  // Per-task colors and patterns are added on top of this.
  EnumerationConfig enumeration;
};

/// Immutable per-task data shared by every expansion.
struct SearchContext {
  std::vector<Grid> outputs;
  std::map<AbstractionKind, AcquiredConstraintSet> acquired;
  std::map<AbstractionKind, EnumerationConfig> enumeration;
};

/// Builds the context for `task`; constraint acquisition runs only when
/// enabled in `config`.
SearchContext prepareContext(const Task& task, const SolverConfig& config);

struct ExpandLimits {
  std::size_t maxChildren = SIZE_MAX;
  // Stop right after the first child reproducing every output.
  bool stopOnGoal = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct ExpandStats {
  std::size_t enumerated = 0;
  std::size_t pruned = 0;
  std::size_t duplicates = 0;
  std::size_t ineffective = 0;
};

using VisitedSet = std::unordered_set<Digest>;

/// Children of `node` in enumeration order. With hashing the digests of new
/// children are added to `visited`.
std::vector<SearchNode> expand(const SearchNode& node, const SearchContext& context,
                               const SolverConfig& config, VisitedSet& visited,
                               const ExpandLimits& limits = {}, ExpandStats* stats = nullptr);

SearchNode makeRoot(AbstractionKind kind, const Task& task, std::span<const Grid> outputs);

/// Exact reconstruction equality on every instance.
bool reproducesOutputs(const SearchNode& node, std::span<const Grid> outputs);

struct SolveStats {
  std::size_t nodesExplored = 0;
  std::size_t expansions = 0;
  std::size_t pruned = 0;
  double elapsedSeconds = 0.0;
  bool solved = false;
  std::size_t programLength = 0;
  bool budgetExhausted = false;
};

struct SolveResult {
  std::optional<Program> program;
  std::vector<Grid> predictions;
  SolveStats stats;
  std::map<AbstractionKind, AcquiredConstraintSet> acquired;
};

/// Throws DimensionMismatch when a training pair changes shape.
SolveResult solve(const Task& task, const SolverConfig& config);

}  // namespace gridsynth
