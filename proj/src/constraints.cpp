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

#include "gridsynth/constraints.hpp"

#include <algorithm>
#include <tuple>

namespace gridsynth {

std::string_view constraintName(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kPositionUnchanged:
      return "positionUnchanged";
    case ConstraintKind::kColorUnchanged:
      return "colorUnchanged";
    case ConstraintKind::kSizeUnchanged:
      return "sizeUnchanged";
  }
  return "unknown";
}

bool checkConstraint(ConstraintKind kind, const ObjectNode& before, const ObjectNode& after) {
  switch (kind) {
    case ConstraintKind::kPositionUnchanged:
      return before.pixels == after.pixels;
    case ConstraintKind::kColorUnchanged:
      return before.color == after.color;
    case ConstraintKind::kSizeUnchanged:
      return before.size() == after.size();
  }
  return false;
}

namespace {

std::size_t overlap(const std::vector<Pixel>& a, const std::vector<Pixel>& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) {
      ++count;
      ++i;
      ++j;
    } else if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

}  // namespace

std::optional<NodePairing> pairNodes(const AbstractedGraph& in, const AbstractedGraph& out,
                                     const FilterExpr& f) {
  const auto left = selectNodes(f, in);
  const auto right = selectNodes(f, out);
  if (left.size() != right.size()) return std::nullopt;

  // (overlap, in id, out id), largest overlap first, then ids ascending.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> candidates;
  for (std::size_t a = 0; a < left.size(); ++a) {
    for (std::size_t b = 0; b < right.size(); ++b) {
      const auto common = overlap(in.nodes()[left[a]].pixels, out.nodes()[right[b]].pixels);
      if (common > 0) candidates.emplace_back(common, a, b);
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) > std::get<0>(y);
    return std::tie(std::get<1>(x), std::get<2>(x)) < std::tie(std::get<1>(y), std::get<2>(y));
  });

  std::vector<bool> usedLeft(left.size(), false);
  std::vector<bool> usedRight(right.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  for (const auto& [common, a, b] : candidates) {
    if (usedLeft[a] || usedRight[b]) continue;
    usedLeft[a] = usedRight[b] = true;
    chosen.emplace_back(a, b);
  }
  if (chosen.size() != left.size()) return std::nullopt;

  std::sort(chosen.begin(), chosen.end());
  NodePairing pairs;
  pairs.reserve(chosen.size());
  for (const auto& [a, b] : chosen) pairs.emplace_back(in.nodes()[left[a]], out.nodes()[right[b]]);
  return pairs;
}

void AcquiredConstraintSet::add(FilterExpr filter, std::vector<ConstraintKind> kinds) {
  auto key = filter.key();
  entries_.insert_or_assign(std::move(key), Entry{std::move(filter), std::move(kinds)});
}

std::span<const ConstraintKind> AcquiredConstraintSet::lookup(const FilterExpr& f) const {
  auto it = entries_.find(f.key());
  if (it == entries_.end()) return {};
  return it->second.kinds;
}

AcquiredConstraintSet acquireConstraints(std::span<const GraphPair> instances,
                                         std::span<const FilterExpr> filters) {
  AcquiredConstraintSet acquired;
  if (instances.empty()) return acquired;
  for (const auto& f : filters) {
    std::vector<bool> holds(kAllConstraints.size(), true);
    bool paired = true;
    for (const auto& instance : instances) {
      auto pairs = pairNodes(instance.input, instance.output, f);
      if (!pairs || pairs->empty()) {
        paired = false;
        break;
      }
      for (const auto& [before, after] : *pairs) {
        for (std::size_t k = 0; k < kAllConstraints.size(); ++k) {
          if (holds[k] && !checkConstraint(kAllConstraints[k], before, after)) holds[k] = false;
        }
      }
    }
    if (!paired) continue;
    std::vector<ConstraintKind> kinds;
    for (std::size_t k = 0; k < kAllConstraints.size(); ++k) {
      if (holds[k]) kinds.push_back(kAllConstraints[k]);
    }
    acquired.add(f, std::move(kinds));
  }
  return acquired;
}

bool incompatible(TransformKind t, ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kPositionUnchanged:
      switch (t) {
        case TransformKind::kMove:
        case TransformKind::kMoveMax:
        case TransformKind::kRotate:
        case TransformKind::kExtend:
        case TransformKind::kMirror:
        case TransformKind::kFlip:
          return true;
        default:
          return false;
      }
    case ConstraintKind::kColorUnchanged:
      return t == TransformKind::kUpdateColor;
    case ConstraintKind::kSizeUnchanged:
      switch (t) {
        case TransformKind::kExtend:
        case TransformKind::kFillRectangle:
        case TransformKind::kHollowRectangle:
        case TransformKind::kAddBorder:
          return true;
        default:
          return false;
      }
  }
  return false;
}

bool violates(const FullOperation& op, const AcquiredConstraintSet& acquired) {
  for (auto kind : acquired.lookup(op.filter)) {
    if (incompatible(op.transform.kind, kind)) return true;
  }
  return false;
}

}  // namespace gridsynth
