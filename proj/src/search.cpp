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

#include "gridsynth/search.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gridsynth {

// ---------------------------------------------------------------------------
// Heuristic

int pixelPenalty(Color actual, Color predicted, Color background) {
  const bool actualBg = actual == background;
  const bool predictedBg = predicted == background;
  if (actualBg != predictedBg) return 2;
  if (!actualBg && actual != predicted) return 1;
  return 0;
}

int scoreGrid(const Grid& predicted, const Grid& actual, Color background) {
  if (predicted.height() != actual.height() || predicted.width() != actual.width()) {
    throw DimensionMismatch("predicted " + std::to_string(predicted.height()) + "x" +
                            std::to_string(predicted.width()) + " vs actual " +
                            std::to_string(actual.height()) + "x" +
                            std::to_string(actual.width()));
  }
  int score = 0;
  for (int r = 0; r < actual.height(); ++r) {
    for (int c = 0; c < actual.width(); ++c) {
      score += pixelPenalty(actual.at(r, c), predicted.at(r, c), background);
    }
  }
  return score;
}

int scoreGraphs(std::span<const AbstractedGraph> graphs, std::span<const Grid> outputs) {
  if (graphs.size() != outputs.size()) {
    throw DimensionMismatch(std::to_string(graphs.size()) + " graphs for " +
                            std::to_string(outputs.size()) + " outputs");
  }
  int score = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    score += scoreGrid(reconstruct(graphs[i]), outputs[i], graphs[i].background());
  }
  return score;
}

// ---------------------------------------------------------------------------
// Hashing

namespace {

class Fnv64 {
 public:
  void mix(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      state_ ^= (v >> (8 * i)) & 0xffu;
      state_ *= 0x100000001b3ull;
    }
  }
  void mix(int v) { mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(v))); }
  Digest value() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ull;
};

Digest combineDigests(std::span<const Digest> digests) {
  Fnv64 h;
  h.mix(static_cast<std::uint64_t>(digests.size()));
  for (auto d : digests) h.mix(d);
  return h.value();
}

}  // namespace

Digest hashGraph(const AbstractedGraph& graph) {
  const auto nodes = graph.nodes();
  std::vector<std::uint32_t> order(nodes.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    const auto& x = nodes[a];
    const auto& y = nodes[b];
    if (x.pixels.front() != y.pixels.front()) return x.pixels.front() < y.pixels.front();
    if (x.color != y.color) return x.color < y.color;
    if (x.pixels != y.pixels) return x.pixels < y.pixels;
    return x.id < y.id;
  });

  Fnv64 h;
  h.mix(static_cast<int>(graph.kind()));
  h.mix(graph.height());
  h.mix(graph.width());
  h.mix(graph.background().value());
  h.mix(static_cast<int>(nodes.size()));
  std::vector<std::uint32_t> rank(nodes.size());
  for (std::uint32_t pos = 0; pos < order.size(); ++pos) {
    const auto& n = nodes[order[pos]];
    rank[order[pos]] = pos;
    h.mix(n.color.value());
    h.mix(static_cast<int>(n.pixels.size()));
    for (const auto& p : n.pixels) {
      h.mix(p.row);
      h.mix(p.col);
    }
  }

  // Where pixels are shared, record the canonical ranks in painting order.
  // Node storage is id-ordered, so a stable sort by pixel keeps that order.
  std::vector<std::pair<Pixel, std::uint32_t>> cover;
  for (std::uint32_t i = 0; i < nodes.size(); ++i) {
    for (const auto& p : nodes[i].pixels) cover.emplace_back(p, i);
  }
  std::stable_sort(cover.begin(), cover.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < cover.size();) {
    std::size_t j = i + 1;
    while (j < cover.size() && cover[j].first == cover[i].first) ++j;
    if (j - i > 1) {
      h.mix(cover[i].first.row);
      h.mix(cover[i].first.col);
      for (std::size_t k = i; k < j; ++k) h.mix(static_cast<int>(rank[cover[k].second]));
    }
    i = j;
  }
  return h.value();
}

Digest hashState(std::span<const AbstractedGraph> graphs) {
  std::vector<Digest> digests;
  digests.reserve(graphs.size());
  for (const auto& g : graphs) digests.push_back(hashGraph(g));
  return combineDigests(digests);
}

// ---------------------------------------------------------------------------
// Frontier

void Frontier::push(SearchNode node) {
  const int key = strategy_ == SearchStrategy::kBestFirst ? node.score
                                                          : static_cast<int>(node.history.size());
  auto& heap = heaps_[node.abstraction];
  heap.push_back(Entry{key, nextSequence_++, std::move(node)});
  std::push_heap(heap.begin(), heap.end(), later);
  ++size_;
}

std::optional<SearchNode> Frontier::pop(const std::function<bool(AbstractionKind)>& eligible) {
  std::vector<Entry>* best = nullptr;
  for (auto& [kind, heap] : heaps_) {
    if (heap.empty() || !eligible(kind)) continue;
    if (!best || later(best->front(), heap.front())) best = &heap;
  }
  if (!best) return std::nullopt;
  std::pop_heap(best->begin(), best->end(), later);
  SearchNode node = std::move(best->back().node);
  best->pop_back();
  --size_;
  return node;
}

bool Frontier::hasNodes(AbstractionKind kind) const {
  auto it = heaps_.find(kind);
  return it != heaps_.end() && !it->second.empty();
}

// ---------------------------------------------------------------------------
// Tabu list

TabuState::TabuState(TabuConfig config, std::span<const AbstractionKind> abstractions)
    : config_(config) {
  for (auto kind : abstractions) slots_[kind];
}

bool TabuState::update(AbstractionKind kind, std::span<const int> childScores) {
  if (childScores.empty()) return false;
  auto& slot = slots_[kind];
  slot.window.push_back(*std::min_element(childScores.begin(), childScores.end()));
  while (slot.window.size() > config_.window) slot.window.pop_front();
  if (slot.window.size() < config_.window || config_.window < 2) return false;
  for (std::size_t i = 1; i < slot.window.size(); ++i) {
    if (slot.window[i] <= slot.window[i - 1]) return false;
  }
  slot.window.clear();
  const auto othersActive = std::count_if(slots_.begin(), slots_.end(), [&](const auto& entry) {
    return entry.first != kind && active(entry.second);
  });
  if (othersActive == 0 || config_.suspension <= 0) return false;
  slot.suspendedFor = config_.suspension;
  return true;
}

bool TabuState::isTabu(AbstractionKind kind) const {
  auto it = slots_.find(kind);
  return it != slots_.end() && it->second.suspendedFor > 0;
}

void TabuState::tick() {
  for (auto& [kind, slot] : slots_) {
    if (slot.suspendedFor > 0) --slot.suspendedFor;
  }
}

void TabuState::retire(AbstractionKind kind) { slots_[kind].retired = true; }

void TabuState::release(AbstractionKind kind) { slots_[kind].suspendedFor = 0; }

// ---------------------------------------------------------------------------
// Expansion

SearchContext prepareContext(const Task& task, const SolverConfig& config) {
  SearchContext context;
  std::set<Color> outputColors;
  for (const auto& ex : task.train) {
    context.outputs.push_back(ex.output);
    for (int r = 0; r < ex.output.height(); ++r) {
      for (int c = 0; c < ex.output.width(); ++c) outputColors.insert(ex.output.at(r, c));
    }
  }

  for (auto kind : config.abstractions) {
    std::vector<AbstractedGraph> inputs;
    std::vector<AbstractedGraph> outputs;
    std::vector<GraphPair> pairs;
    for (const auto& ex : task.train) {
      inputs.push_back(abstractGrid(ex.input, kind));
      outputs.push_back(abstractGrid(ex.output, kind));
      pairs.push_back({inputs.back(), outputs.back()});
    }

    EnumerationConfig enumeration = config.enumeration;
    std::set<Color> colors(enumeration.extraColors.begin(), enumeration.extraColors.end());
    colors.insert(outputColors.begin(), outputColors.end());
    enumeration.extraColors.assign(colors.begin(), colors.end());
    if (std::find(enumeration.transforms.begin(), enumeration.transforms.end(),
                  TransformKind::kInsertPattern) != enumeration.transforms.end()) {
      std::set<PatternDef> patterns(enumeration.patterns.begin(), enumeration.patterns.end());
      for (auto& p : harvestPatterns(inputs, outputs)) patterns.insert(std::move(p));
      enumeration.patterns.assign(patterns.begin(), patterns.end());
    }

    if (config.useConstraints) {
      context.acquired[kind] =
          acquireConstraints(pairs, enumerateFilters(inputs, enumeration.filterDepth));
    } else {
      context.acquired[kind] = AcquiredConstraintSet{};
    }
    context.enumeration[kind] = std::move(enumeration);
  }
  return context;
}

SearchNode makeRoot(AbstractionKind kind, const Task& task, std::span<const Grid> outputs) {
  SearchNode root{kind, {}, {}, 0, 0};
  for (const auto& ex : task.train) root.graphs.push_back(abstractGrid(ex.input, kind));
  root.score = scoreGraphs(root.graphs, outputs);
  root.digest = hashState(root.graphs);
  return root;
}

bool reproducesOutputs(const SearchNode& node, std::span<const Grid> outputs) {
  if (node.graphs.size() != outputs.size()) return false;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (reconstruct(node.graphs[i]) != outputs[i]) return false;
  }
  return true;
}

namespace {

struct Child {
  bool unchanged = true;
  std::vector<AbstractedGraph> graphs;
  Digest digest = 0;
  int score = 0;
};

}  // namespace

std::vector<SearchNode> expand(const SearchNode& node, const SearchContext& context,
                               const SolverConfig& config, VisitedSet& visited,
                               const ExpandLimits& limits, ExpandStats* stats) {
  ExpandStats local;
  ExpandStats& counters = stats ? *stats : local;
  std::vector<SearchNode> children;
  if (limits.maxChildren == 0) return children;

  const auto& enumeration = context.enumeration.at(node.abstraction);
  const AcquiredConstraintSet* acquired = nullptr;
  if (config.useConstraints) {
    auto it = context.acquired.find(node.abstraction);
    if (it != context.acquired.end()) acquired = &it->second;
  }
  const OperationSpace space = enumerateOperationSpace(node.graphs, enumeration);
  const std::size_t instances = node.graphs.size();

  std::vector<Digest> parentDigests;
  for (const auto& g : node.graphs) parentDigests.push_back(hashGraph(g));

  // Children depend only on the matched node sets, so filters selecting the
  // same nodes share results.
  std::map<std::vector<std::vector<std::size_t>>, std::size_t> signatures;
  std::vector<std::vector<std::optional<Child>>> memo;
  std::size_t sinceClockCheck = 0;

  for (const auto& filter : space.filters) {
    std::vector<std::vector<std::size_t>> selection(instances);
    bool anyMatch = false;
    for (std::size_t i = 0; i < instances; ++i) {
      selection[i] = selectNodes(filter, node.graphs[i]);
      anyMatch = anyMatch || !selection[i].empty();
    }
    if (!anyMatch) {
      counters.enumerated += space.steps.size();
      counters.ineffective += space.steps.size();
      continue;
    }
    auto [it, inserted] = signatures.try_emplace(std::move(selection), memo.size());
    if (inserted) memo.emplace_back(space.steps.size());
    auto& results = memo[it->second];
    const auto& matched = it->first;
    const auto constraints =
        acquired ? acquired->lookup(filter) : std::span<const ConstraintKind>{};

    for (std::size_t s = 0; s < space.steps.size(); ++s) {
      ++counters.enumerated;
      const auto& step = space.steps[s];
      if (std::any_of(constraints.begin(), constraints.end(),
                      [&](auto kind) { return incompatible(step.kind, kind); })) {
        ++counters.pruned;
        continue;
      }

      if (limits.deadline && ++sinceClockCheck >= 256) {
        sinceClockCheck = 0;
        if (std::chrono::steady_clock::now() >= *limits.deadline) return children;
      }

      if (!results[s]) {
        Child child;
        child.graphs.reserve(instances);
        std::vector<Digest> digests;
        for (std::size_t i = 0; i < instances; ++i) {
          if (matched[i].empty()) {
            child.graphs.push_back(node.graphs[i]);
            digests.push_back(parentDigests[i]);
            continue;
          }
          auto result = applyToNodes(node.graphs[i], matched[i], step);
          digests.push_back(result.effective ? hashGraph(result.graph) : parentDigests[i]);
          if (digests.back() != parentDigests[i]) child.unchanged = false;
          child.graphs.push_back(std::move(result.graph));
        }
        if (!child.unchanged) {
          child.digest = combineDigests(digests);
          child.score = scoreGraphs(child.graphs, context.outputs);
        }
        results[s] = std::move(child);
      }

      const Child& child = *results[s];
      if (child.unchanged) {
        ++counters.ineffective;
        continue;
      }
      if (config.useHashing && !visited.insert(child.digest).second) {
        ++counters.duplicates;
        continue;
      }

      SearchNode next{node.abstraction, child.graphs, node.history, child.score, child.digest};
      next.history.push_back(FullOperation{filter, step});
      children.push_back(std::move(next));
      if (children.size() >= limits.maxChildren) return children;
      if (limits.stopOnGoal && child.score == 0 &&
          reproducesOutputs(children.back(), context.outputs)) {
        return children;
      }
    }
  }
  return children;
}

// ---------------------------------------------------------------------------
// Solver

SolveResult solve(const Task& task, const SolverConfig& config) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(config.timeLimitSeconds));

  for (std::size_t i = 0; i < task.train.size(); ++i) {
    const auto& ex = task.train[i];
    if (ex.input.height() != ex.output.height() || ex.input.width() != ex.output.width()) {
      throw DimensionMismatch("training pair " + std::to_string(i) + " changes grid shape");
    }
  }
  if (config.abstractions.empty()) throw std::invalid_argument("no abstraction enabled");

  SolveResult result;
  const SearchContext context = prepareContext(task, config);
  result.acquired = context.acquired;

  Frontier frontier(config.strategy);
  TabuState tabu(config.tabu, config.abstractions);
  VisitedSet visited;
  std::optional<SearchNode> goal;

  auto finish = [&]() {
    result.stats.elapsedSeconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (goal) {
      Program program{goal->abstraction, goal->history};
      for (const auto& t : task.test) result.predictions.push_back(applyProgram(program, t.input));
      result.stats.solved = true;
      result.stats.programLength = program.steps.size();
      result.program = std::move(program);
    }
    return result;
  };

  std::vector<SearchNode> roots;
  for (auto kind : config.abstractions) {
    SearchNode root = makeRoot(kind, task, context.outputs);
    if (config.useHashing && !visited.insert(root.digest).second) continue;
    ++result.stats.nodesExplored;
    roots.push_back(std::move(root));
  }
  for (auto& root : roots) {
    if (!goal && root.score == 0 && reproducesOutputs(root, context.outputs)) goal = root;
  }
  if (goal) return finish();
  // Every root is expanded once before the frontier takes over, so each
  // abstraction gets its first level of children.
  std::deque<SearchNode> seeds(roots.begin(), roots.end());

  while (!seeds.empty() || !frontier.empty()) {
    if (result.stats.nodesExplored >= config.nodeLimit || Clock::now() >= deadline) {
      result.stats.budgetExhausted = true;
      break;
    }
    std::optional<SearchNode> node;
    if (!seeds.empty()) {
      node = std::move(seeds.front());
      seeds.pop_front();
    } else if (config.useTabu) {
      node = frontier.pop([&](AbstractionKind kind) { return !tabu.isTabu(kind); });
      if (!node) {
        // Only suspended abstractions have nodes left.
        node = frontier.pop();
        if (node) tabu.release(node->abstraction);
      }
    } else {
      node = frontier.pop();
    }
    if (!node) break;
    if (node->history.size() >= config.maxDepth) continue;

    ExpandLimits limits;
    limits.maxChildren = config.nodeLimit - result.stats.nodesExplored;
    limits.stopOnGoal = true;
    limits.deadline = deadline;
    ExpandStats expandStats;
    auto children = expand(*node, context, config, visited, limits, &expandStats);
    ++result.stats.expansions;
    result.stats.pruned += expandStats.pruned;
    result.stats.nodesExplored += children.size();

    if (config.useTabu) {
      std::vector<int> scores;
      scores.reserve(children.size());
      for (const auto& c : children) scores.push_back(c.score);
      tabu.tick();
      tabu.update(node->abstraction, scores);
    }

    for (auto& child : children) {
      if (child.score == 0 && reproducesOutputs(child, context.outputs)) {
        goal = std::move(child);
        return finish();
      }
      frontier.push(std::move(child));
    }
    if (config.useTabu && !frontier.hasNodes(node->abstraction)) tabu.retire(node->abstraction);
  }
  return finish();
}

}  // namespace gridsynth
