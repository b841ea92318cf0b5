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

#include "gridsynth/enumerate.hpp"

#include <algorithm>
#include <set>

namespace gridsynth {

std::vector<Color> presentColors(std::span<const AbstractedGraph> graphs) {
  std::set<Color> colors;
  for (const auto& g : graphs) {
    for (const auto& n : g.nodes()) colors.insert(n.color);
  }
  return {colors.begin(), colors.end()};
}

std::vector<Size> presentSizes(std::span<const AbstractedGraph> graphs) {
  std::set<Size> sizes;
  for (const auto& g : graphs) {
    for (const auto& n : g.nodes()) sizes.insert(n.size());
  }
  return {sizes.begin(), sizes.end()};
}

std::vector<FilterExpr> leafFilters(std::span<const AbstractedGraph> graphs) {
  const auto colors = presentColors(graphs);
  const auto sizes = presentSizes(graphs);
  std::vector<FilterExpr> leaves{FilterExpr::all()};
  for (auto c : colors) leaves.push_back(FilterExpr::byColor(c));
  for (auto s : sizes) leaves.push_back(FilterExpr::bySize(s));
  for (auto c : colors) leaves.push_back(FilterExpr::byNeighborColor(c));
  for (auto s : sizes) leaves.push_back(FilterExpr::byNeighborSize(s));
  return leaves;
}

namespace {

using Op = FilterExpr::Op;

bool isOwnAttribute(const FilterExpr& f) { return f.op() == Op::kByColor || f.op() == Op::kBySize; }

}  // namespace

std::vector<FilterExpr> enumerateFilters(std::span<const AbstractedGraph> graphs, int depth) {
  std::vector<FilterExpr> filters = leafFilters(graphs);
  if (depth < 2) return filters;

  // Everything except `all`, which is the identity of and and the absorber of or.
  std::vector<FilterExpr> leaves(filters.begin() + 1, filters.end());

  for (const auto& f : leaves) filters.push_back(FilterExpr::negate(f));
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      filters.push_back(FilterExpr::both(leaves[i], leaves[j]));
    }
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      filters.push_back(FilterExpr::either(leaves[i], leaves[j]));
    }
  }
  // existsNeighbor over an own-attribute leaf repeats byNeighborColor /
  // byNeighborSize, so only the universal form is new at this depth.
  for (const auto& f : leaves) {
    if (isOwnAttribute(f)) filters.push_back(FilterExpr::forAllNeighbors(f));
  }

  // Deeper levels combine the previous level with everything below it.
  std::size_t levelBegin = 1 + leaves.size();
  for (int level = 3; level <= depth; ++level) {
    const std::size_t levelEnd = filters.size();
    std::vector<FilterExpr> next;
    for (std::size_t i = levelBegin; i < levelEnd; ++i) {
      const auto& f = filters[i];
      if (f.op() != Op::kNot) next.push_back(FilterExpr::negate(f));
      next.push_back(FilterExpr::existsNeighbor(f));
      next.push_back(FilterExpr::forAllNeighbors(f));
      for (std::size_t j = 1; j < i; ++j) {
        next.push_back(FilterExpr::both(filters[j], f));
        next.push_back(FilterExpr::either(filters[j], f));
      }
    }
    for (auto& f : next) filters.push_back(std::move(f));
    levelBegin = levelEnd;
  }
  return filters;
}

namespace {

std::vector<ParamBinding> colorBindings(std::span<const AbstractedGraph> graphs,
                                        const EnumerationConfig& config,
                                        std::span<const FilterExpr> leaves) {
  std::set<Color> colors(config.extraColors.begin(), config.extraColors.end());
  for (auto c : presentColors(graphs)) colors.insert(c);
  std::vector<ParamBinding> out;
  for (auto c : colors) out.push_back(ParamBinding::constant(c));
  if (config.dynamicBindings) {
    out.push_back(ParamBinding::own(Relation::kColor));
    for (const auto& f : leaves) out.push_back(ParamBinding::neighbor(f, Relation::kColor));
  }
  return out;
}

std::vector<ParamBinding> staticDirections(const EnumerationConfig& config) {
  std::vector<ParamBinding> out;
  if (config.diagonalDirections) {
    for (auto d : kAllDirections) out.push_back(ParamBinding::constant(d));
  } else {
    for (auto d : kCardinalDirections) out.push_back(ParamBinding::constant(d));
  }
  return out;
}

std::vector<ParamBinding> directionBindings(const EnumerationConfig& config,
                                            std::span<const FilterExpr> leaves) {
  auto out = staticDirections(config);
  if (config.dynamicBindings) {
    for (const auto& f : leaves) out.push_back(ParamBinding::neighbor(f, Relation::kDirection));
  }
  return out;
}

std::vector<ParamBinding> pixelBindings(const EnumerationConfig& config,
                                        std::span<const FilterExpr> leaves) {
  // No static pixels: the candidate set would be the whole grid.
  std::vector<ParamBinding> out{ParamBinding::own(Relation::kPosition)};
  if (config.dynamicBindings) {
    for (const auto& f : leaves) out.push_back(ParamBinding::neighbor(f, Relation::kPosition));
  }
  return out;
}

}  // namespace

std::vector<TransformStep> enumerateSteps(std::span<const AbstractedGraph> graphs,
                                          const EnumerationConfig& config) {
  const auto leaves = leafFilters(graphs);
  const auto colors = colorBindings(graphs, config, leaves);
  const auto directions = directionBindings(config, leaves);

  std::vector<TransformKind> kinds = config.transforms;
  std::sort(kinds.begin(), kinds.end());
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

  std::vector<TransformStep> steps;
  for (auto kind : kinds) {
    switch (kind) {
      case TransformKind::kUpdateColor:
      case TransformKind::kFillRectangle:
      case TransformKind::kHollowRectangle:
      case TransformKind::kAddBorder:
        for (const auto& b : colors) steps.push_back(TransformStep::make(kind, {b}));
        break;
      case TransformKind::kMove:
      case TransformKind::kMoveMax:
      case TransformKind::kExtend:
        for (const auto& b : directions) steps.push_back(TransformStep::make(kind, {b}));
        break;
      case TransformKind::kFlip:
        // Only the axis matters, so dynamic directions add nothing.
        for (const auto& b : staticDirections(config)) {
          steps.push_back(TransformStep::make(kind, {b}));
        }
        break;
      case TransformKind::kRotate:
        steps.push_back(TransformStep::make(kind, {}));
        break;
      case TransformKind::kInsertPattern:
        for (const auto& pa : config.patterns) {
          steps.push_back(TransformStep::make(kind, {ParamBinding::constant(pa)}));
        }
        break;
      case TransformKind::kMirror:
        for (const auto& px : pixelBindings(config, leaves)) {
          for (const auto& d : staticDirections(config)) {
            steps.push_back(TransformStep::make(kind, {px, d}));
          }
        }
        break;
    }
  }
  return steps;
}

OperationSpace enumerateOperationSpace(std::span<const AbstractedGraph> graphs,
                                       const EnumerationConfig& config) {
  return {enumerateFilters(graphs, config.filterDepth), enumerateSteps(graphs, config)};
}

std::vector<FullOperation> enumerateOperations(std::span<const AbstractedGraph> graphs,
                                               const EnumerationConfig& config) {
  const auto space = enumerateOperationSpace(graphs, config);
  std::vector<FullOperation> ops;
  ops.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) ops.push_back(space.at(i));
  return ops;
}

std::vector<PatternDef> harvestPatterns(std::span<const AbstractedGraph> inputs,
                                        std::span<const AbstractedGraph> outputs) {
  std::set<PatternDef> patterns;
  for (std::size_t k = 0; k < outputs.size(); ++k) {
    for (const auto& out : outputs[k].nodes()) {
      bool inInput = false;
      if (k < inputs.size()) {
        for (const auto& in : inputs[k].nodes()) {
          if (in.color == out.color && in.pixels == out.pixels) {
            inInput = true;
            break;
          }
        }
      }
      if (inInput) continue;
      const auto box = out.bounds();
      PatternDef pattern;
      for (const auto& p : out.pixels) {
        pattern.cells.push_back({{p.row - box.minRow, p.col - box.minCol}, out.color});
      }
      std::sort(pattern.cells.begin(), pattern.cells.end());
      patterns.insert(std::move(pattern));
    }
  }
  return {patterns.begin(), patterns.end()};
}

}  // namespace gridsynth
