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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridsynth/abstraction.hpp"
#include "gridsynth/dsl.hpp"

namespace gridsynth {

enum class ConstraintKind : std::uint8_t { kPositionUnchanged, kColorUnchanged, kSizeUnchanged };

inline constexpr std::array kAllConstraints = {ConstraintKind::kPositionUnchanged,
                                               ConstraintKind::kColorUnchanged,
                                               ConstraintKind::kSizeUnchanged};

std::string_view constraintName(ConstraintKind kind);

bool checkConstraint(ConstraintKind kind, const ObjectNode& before, const ObjectNode& after);

using NodePairing = std::vector<std::pair<ObjectNode, ObjectNode>>;

/// Greedy maximum-overlap matching of the nodes `f` selects in each graph.
/// nullopt when the selections differ in size or some node overlaps nothing.
std::optional<NodePairing> pairNodes(const AbstractedGraph& in, const AbstractedGraph& out,
                                     const FilterExpr& f);

/// Constraints that held on every paired node, per filter (keyed by
/// FilterExpr::key()). A filter appears only if pairing succeeded with at
/// least one pair on every training instance.
class AcquiredConstraintSet {
 public:
  struct Entry {
    FilterExpr filter;
    std::vector<ConstraintKind> kinds;
  };

  void add(FilterExpr filter, std::vector<ConstraintKind> kinds);
  /// Empty when nothing was acquired for `f`.
  std::span<const ConstraintKind> lookup(const FilterExpr& f) const;
  const std::map<std::string, Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::string, Entry> entries_;
};

struct GraphPair {
  AbstractedGraph input;
  AbstractedGraph output;
};

AcquiredConstraintSet acquireConstraints(std::span<const GraphPair> instances,
                                         std::span<const FilterExpr> filters);

/// Whether transformation `t` can break constraint `kind` on the nodes it touches.
bool incompatible(TransformKind t, ConstraintKind kind);

bool violates(const FullOperation& op, const AcquiredConstraintSet& acquired);

}  // namespace gridsynth
