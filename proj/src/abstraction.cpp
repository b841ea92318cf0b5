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

#include "gridsynth/abstraction.hpp"

#include <algorithm>
#include <array>

namespace gridsynth {

std::string_view abstractionName(AbstractionKind kind) {
  switch (kind) {
    case AbstractionKind::kConnected:
      return "connected";
    case AbstractionKind::kVertical:
      return "vertical";
  }
  return "unknown";
}

std::optional<AbstractionKind> abstractionFromName(std::string_view name) {
  for (auto kind : kAllAbstractions) {
    if (abstractionName(kind) == name) return kind;
  }
  return std::nullopt;
}

bool ObjectNode::contains(Pixel p) const {
  return std::binary_search(pixels.begin(), pixels.end(), p);
}

BoundingBox ObjectNode::bounds() const {
  BoundingBox box{pixels.front().row, pixels.front().row, pixels.front().col,
                  pixels.front().col};
  for (const auto& p : pixels) {
    box.minRow = std::min(box.minRow, p.row);
    box.maxRow = std::max(box.maxRow, p.row);
    box.minCol = std::min(box.minCol, p.col);
    box.maxCol = std::max(box.maxCol, p.col);
  }
  return box;
}

void normalizePixels(std::vector<Pixel>& pixels) {
  std::sort(pixels.begin(), pixels.end());
  pixels.erase(std::unique(pixels.begin(), pixels.end()), pixels.end());
}

namespace {

std::vector<int> distinctSorted(std::span<const Pixel> pixels, bool rows) {
  std::vector<int> values;
  values.reserve(pixels.size());
  for (const auto& p : pixels) values.push_back(rows ? p.row : p.col);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

std::vector<GraphEdge> buildEdges(std::span<const ObjectNode> nodes) {
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols;
  rows.reserve(nodes.size());
  cols.reserve(nodes.size());
  for (const auto& n : nodes) {
    rows.push_back(distinctSorted(n.pixels, true));
    cols.push_back(distinctSorted(n.pixels, false));
  }
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      NodeId a = std::min(nodes[i].id, nodes[j].id);
      NodeId b = std::max(nodes[i].id, nodes[j].id);
      if (intersects(cols[i], cols[j])) edges.push_back({a, b, EdgeDirection::kVertical});
      if (intersects(rows[i], rows[j])) edges.push_back({a, b, EdgeDirection::kHorizontal});
    }
  }
  return edges;
}

AbstractedGraph::AbstractedGraph(AbstractionKind kind, int height, int width, Color background,
                                 std::vector<ObjectNode> nodes, std::optional<NodeId> nextId) {
  std::sort(nodes.begin(), nodes.end(),
            [](const ObjectNode& a, const ObjectNode& b) { return a.id < b.id; });
  NodeId next = nodes.empty() ? 0 : nodes.back().id + 1;
  if (nextId) next = std::max(next, *nextId);

  auto data = std::make_shared<Data>();
  data->kind = kind;
  data->height = height;
  data->width = width;
  data->background = background;
  data->edges = buildEdges(nodes);
  data->adjacency.resize(nodes.size());
  data->nextId = next;
  data->nodes = std::move(nodes);

  auto indexOfId = [&](NodeId id) {
    auto it = std::lower_bound(data->nodes.begin(), data->nodes.end(), id,
                               [](const ObjectNode& n, NodeId v) { return n.id < v; });
    return static_cast<std::uint32_t>(it - data->nodes.begin());
  };
  for (const auto& e : data->edges) {
    auto s = indexOfId(e.source);
    auto t = indexOfId(e.target);
    data->adjacency[s].push_back(t);
    data->adjacency[t].push_back(s);
  }
  for (auto& adj : data->adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  data_ = std::move(data);
}

std::optional<std::size_t> AbstractedGraph::indexOf(NodeId id) const {
  const auto& nodes = data_->nodes;
  auto it = std::lower_bound(nodes.begin(), nodes.end(), id,
                             [](const ObjectNode& n, NodeId v) { return n.id < v; });
  if (it == nodes.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

Color detectBackground(const Grid& grid) {
  std::array<int, kNumColors> counts{};
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) ++counts[static_cast<std::size_t>(grid.at(r, c).value())];
  }
  if (counts[0] > 0) return Color{0};
  // max_element returns the first maximum, i.e. the lowest color on ties.
  return Color{static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin())};
}

namespace {

// Ids follow raster order of each node's smallest pixel.
AbstractedGraph finish(AbstractionKind kind, const Grid& grid, Color background,
                       std::vector<ObjectNode> nodes) {
  for (auto& n : nodes) normalizePixels(n.pixels);
  std::sort(nodes.begin(), nodes.end(), [](const ObjectNode& a, const ObjectNode& b) {
    return a.pixels.front() < b.pixels.front();
  });
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i].id = static_cast<NodeId>(i);
  return AbstractedGraph(kind, grid.height(), grid.width(), background, std::move(nodes));
}

}  // namespace

AbstractedGraph abstractConnected(const Grid& grid) {
  const Color background = detectBackground(grid);
  const int h = grid.height();
  const int w = grid.width();
  std::vector<bool> seen(static_cast<std::size_t>(h * w), false);
  std::vector<ObjectNode> nodes;
  std::vector<Pixel> stack;

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const Color color = grid.at(r, c);
      if (color == background || seen[static_cast<std::size_t>(r * w + c)]) continue;
      ObjectNode node;
      node.color = color;
      stack.push_back({r, c});
      seen[static_cast<std::size_t>(r * w + c)] = true;
      while (!stack.empty()) {
        Pixel p = stack.back();
        stack.pop_back();
        node.pixels.push_back(p);
        constexpr std::array<Pixel, 4> kSteps{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
        for (const auto& step : kSteps) {
          Pixel q{p.row + step.row, p.col + step.col};
          if (!grid.contains(q)) continue;
          auto idx = static_cast<std::size_t>(q.row * w + q.col);
          if (seen[idx] || grid.at(q) != color) continue;
          seen[idx] = true;
          stack.push_back(q);
        }
      }
      nodes.push_back(std::move(node));
    }
  }
  return finish(AbstractionKind::kConnected, grid, background, std::move(nodes));
}

AbstractedGraph abstractVertical(const Grid& grid) {
  const Color background = detectBackground(grid);
  std::vector<ObjectNode> nodes;
  for (int c = 0; c < grid.width(); ++c) {
    int r = 0;
    while (r < grid.height()) {
      const Color color = grid.at(r, c);
      if (color == background) {
        ++r;
        continue;
      }
      ObjectNode node;
      node.color = color;
      while (r < grid.height() && grid.at(r, c) == color) node.pixels.push_back({r++, c});
      nodes.push_back(std::move(node));
    }
  }
  return finish(AbstractionKind::kVertical, grid, background, std::move(nodes));
}

AbstractedGraph abstractGrid(const Grid& grid, AbstractionKind kind) {
  switch (kind) {
    case AbstractionKind::kConnected:
      return abstractConnected(grid);
    case AbstractionKind::kVertical:
      return abstractVertical(grid);
  }
  return abstractConnected(grid);
}

Grid reconstruct(const AbstractedGraph& graph) {
  Grid grid(graph.height(), graph.width(), graph.background());
  for (const auto& node : graph.nodes()) {
    for (const auto& p : node.pixels) {
      if (grid.contains(p)) grid.set(p, node.color);
    }
  }
  return grid;
}

}  // namespace gridsynth
