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

#include "gridsynth/grid.hpp"

namespace gridsynth {

Grid::Grid(int height, int width, Color fill) : height_(height), width_(width) {
  if (height < 1 || height > kMaxGridDim || width < 1 || width > kMaxGridDim) {
    throw InvalidGrid("grid dimensions " + std::to_string(height) + "x" + std::to_string(width) +
                      " outside 1..30");
  }
  cells_.assign(static_cast<std::size_t>(height) * static_cast<std::size_t>(width), fill);
}

Grid Grid::fromRows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw InvalidGrid("empty grid");
  }
  const auto width = rows.front().size();
  if (rows.size() > kMaxGridDim || width > kMaxGridDim) {
    throw InvalidGrid("grid larger than 30x30");
  }
  Grid grid(static_cast<int>(rows.size()), static_cast<int>(width));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw InvalidGrid("ragged row " + std::to_string(r));
    }
    for (std::size_t c = 0; c < width; ++c) {
      grid.set({static_cast<int>(r), static_cast<int>(c)}, Color{rows[r][c]});
    }
  }
  return grid;
}

std::vector<std::vector<int>> Grid::toRows() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(height_));
  for (int r = 0; r < height_; ++r) {
    auto& row = rows[static_cast<std::size_t>(r)];
    row.reserve(static_cast<std::size_t>(width_));
    for (int c = 0; c < width_; ++c) row.push_back(at(r, c).value());
  }
  return rows;
}

}  // namespace gridsynth
