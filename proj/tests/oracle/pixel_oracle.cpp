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

#include "pixel_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

int background(const Rows& g) {
  int counts[10] = {0};
  for (const auto& row : g)
    for (int v : row) ++counts[v];
  if (counts[0] > 0) return 0;
  int best = 0;
  for (int c = 1; c < 10; ++c)
    if (counts[c] > counts[best]) best = c;
  return best;
}

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<Object> objects(const Rows& g, Kind kind) {
  const int h = static_cast<int>(g.size());
  const int w = static_cast<int>(g[0].size());
  const int bg = background(g);
  std::vector<int> parent(h * w);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) { parent[find(parent, a)] = find(parent, b); };
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (g[r][c] == bg) continue;
      if (r + 1 < h && g[r + 1][c] == g[r][c]) unite(r * w + c, (r + 1) * w + c);
      if (kind == Kind::kConnected && c + 1 < w && g[r][c + 1] == g[r][c])
        unite(r * w + c, r * w + c + 1);
    }
  }
  // Ids follow the raster position of each object's first cell.
  std::vector<int> idOfRoot(h * w, -1);
  std::vector<Object> out;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (g[r][c] == bg) continue;
      int root = find(parent, r * w + c);
      if (idOfRoot[root] < 0) {
        idOfRoot[root] = static_cast<int>(out.size());
        out.push_back({idOfRoot[root], g[r][c], {}});
      }
      out[idOfRoot[root]].cells.insert({r, c});
    }
  }
  return out;
}

Rows paint(const std::vector<Object>& objs, int height, int width, int bg) {
  Rows g(height, std::vector<int>(width, bg));
  std::vector<const Object*> order;
  for (const auto& o : objs) order.push_back(&o);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->id < b->id; });
  for (const auto* o : order)
    for (auto [r, c] : o->cells)
      if (r >= 0 && r < height && c >= 0 && c < width) g[r][c] = o->color;
  return g;
}

bool matches(const Step& step, const Object& o) {
  switch (step.filter) {
    case Step::Filter::kAll:
      return true;
    case Step::Filter::kColor:
      return o.color == step.filterValue;
    case Step::Filter::kSize:
      return static_cast<int>(o.cells.size()) == step.filterValue;
  }
  return false;
}

Rows run(const Rows& g, Kind kind, const std::vector<Step>& program) {
  const int h = static_cast<int>(g.size());
  const int w = static_cast<int>(g[0].size());
  const int bg = background(g);
  std::vector<Object> objs = objects(g, kind);
  int nextId = static_cast<int>(objs.size());

  for (const auto& step : program) {
    // Matches are decided on the pre-step objects, visited in id order.
    std::sort(objs.begin(), objs.end(), [](const Object& a, const Object& b) { return a.id < b.id; });
    std::vector<Object> next;
    for (const auto& o : objs) {
      Object t = o;
      if (matches(step, o)) {
        if (step.action == Step::Action::kRecolor) {
          t.color = step.color;
        } else {
          t.cells.clear();
          for (auto [r, c] : o.cells) t.cells.insert({r + step.dr, c + step.dc});
        }
      }
      // An object that did not change keeps its place in the paint order.
      if (t.color != o.color || t.cells != o.cells) t.id = nextId++;
      next.push_back(std::move(t));
    }
    objs = std::move(next);
  }
  return paint(objs, h, w, bg);
}

}  // namespace oracle
