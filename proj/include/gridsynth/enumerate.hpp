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

#include <span>
#include <vector>

#include "gridsynth/abstraction.hpp"
#include "gridsynth/dsl.hpp"

namespace gridsynth {

struct EnumerationConfig {
  int filterDepth = 2;
  bool dynamicBindings = true;
  bool diagonalDirections = false;
  std::vector<TransformKind> transforms{kAllTransforms.begin(), kAllTransforms.end()};
  // Static color candidates on top of the colors present in the graphs,
  // typically the colors of the training outputs.
  std::vector<Color> extraColors;
  std::vector<PatternDef> patterns;
};

/// Distinct node colors across the graphs, ascending.
std::vector<Color> presentColors(std::span<const AbstractedGraph> graphs);
/// Distinct node sizes across the graphs, ascending.
std::vector<Size> presentSizes(std::span<const AbstractedGraph> graphs);

/// Depth-1 filters: all, then byColor, bySize, byNeighborColor,
/// byNeighborSize over the present constants.
std::vector<FilterExpr> leafFilters(std::span<const AbstractedGraph> graphs);

/// Every filter up to `depth`, shallow ones first, in a fixed order.
std::vector<FilterExpr> enumerateFilters(std::span<const AbstractedGraph> graphs, int depth);

/// Every parameterized transformation step, grouped by transformation.
std::vector<TransformStep> enumerateSteps(std::span<const AbstractedGraph> graphs,
                                          const EnumerationConfig& config);

/// Filters x steps without materializing the product.
struct OperationSpace {
  std::vector<FilterExpr> filters;
  std::vector<TransformStep> steps;

  std::size_t size() const { return filters.size() * steps.size(); }
  /// Filter-major: operation i uses filters[i / |steps|].
  FullOperation at(std::size_t i) const {
    return {filters[i / steps.size()], steps[i % steps.size()]};
  }
};

OperationSpace enumerateOperationSpace(std::span<const AbstractedGraph> graphs,
                                       const EnumerationConfig& config);

std::vector<FullOperation> enumerateOperations(std::span<const AbstractedGraph> graphs,
                                               const EnumerationConfig& config);

/// Shapes of output nodes with no identical (pixels and color) input node,
/// anchored at their bounding-box top-left. Deduplicated and sorted.
std::vector<PatternDef> harvestPatterns(std::span<const AbstractedGraph> inputs,
                                        std::span<const AbstractedGraph> outputs);

}  // namespace gridsynth
