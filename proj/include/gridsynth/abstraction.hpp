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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gridsynth/grid.hpp"

namespace gridsynth {

/// How a grid is carved into objects.
enum class AbstractionKind : std::uint8_t {
  kConnected,  // 4-connected single-color components
  kVertical,   // maximal single-color vertical runs
};

inline constexpr std::array kAllAbstractions = {AbstractionKind::kConnected,
                                                AbstractionKind::kVertical};

std::string_view abstractionName(AbstractionKind kind);
std::optional<AbstractionKind> abstractionFromName(std::string_view name);

using NodeId = std::uint32_t;

struct BoundingBox {
  int minRow;
  int maxRow;
  int minCol;
  int maxCol;
};

struct ObjectNode {
  NodeId id = 0;
  Color color;
  // Sorted, duplicate-free.
  std::vector<Pixel> pixels;

  Size size() const { return Size{static_cast<int>(pixels.size())}; }
  bool contains(Pixel p) const;
  BoundingBox bounds() const;
};

/// Sorts and deduplicates so `pixels` satisfies ObjectNode's invariant.
void normalizePixels(std::vector<Pixel>& pixels);

enum class EdgeDirection : std::uint8_t { kVertical, kHorizontal };

struct GraphEdge {
  NodeId source;
  NodeId target;
  EdgeDirection direction;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Alignment edges: horizontal when two nodes share a row index, vertical
/// when they share a column index. Pairs are emitted with source < target.
std::vector<GraphEdge> buildEdges(std::span<const ObjectNode> nodes);

/// Immutable object graph. Copies share storage.
class AbstractedGraph {
 public:
  /// `nodes` need not be sorted; ids must be unique. Edges are derived.
  /// `nextId` defaults to one past the largest id.
  AbstractedGraph(AbstractionKind kind, int height, int width, Color background,
                  std::vector<ObjectNode> nodes, std::optional<NodeId> nextId = std::nullopt);

  AbstractionKind kind() const { return data_->kind; }
  int height() const { return data_->height; }
  int width() const { return data_->width; }
  Color background() const { return data_->background; }

  /// Ascending id order, which is also painting order.
  std::span<const ObjectNode> nodes() const { return data_->nodes; }
  std::span<const GraphEdge> edges() const { return data_->edges; }

  /// Indices (into nodes()) of nodes sharing an edge with nodes()[index].
  std::span<const std::uint32_t> neighbors(std::size_t index) const {
    return data_->adjacency[index];
  }

  std::optional<std::size_t> indexOf(NodeId id) const;
  NodeId nextId() const { return data_->nextId; }

  bool shares(const AbstractedGraph& other) const { return data_ == other.data_; }

 private:
  struct Data {
    AbstractionKind kind;
    int height;
    int width;
    Color background;
    std::vector<ObjectNode> nodes;
    std::vector<GraphEdge> edges;
    std::vector<std::vector<std::uint32_t>> adjacency;
    NodeId nextId;
  };
  std::shared_ptr<const Data> data_;
};

/// 0 when present; otherwise the most frequent color, lowest value on ties.
Color detectBackground(const Grid& grid);

AbstractedGraph abstractConnected(const Grid& grid);
AbstractedGraph abstractVertical(const Grid& grid);
AbstractedGraph abstractGrid(const Grid& grid, AbstractionKind kind);

/// Paints nodes over the background in ascending id order; pixels outside
/// the grid are dropped.
Grid reconstruct(const AbstractedGraph& graph);

}  // namespace gridsynth
