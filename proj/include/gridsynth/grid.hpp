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

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridsynth {

inline constexpr int kMaxGridDim = 30;
inline constexpr int kNumColors = 10;

/// Raised for ragged, empty, oversized, or out-of-palette grids.
class InvalidGrid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One of the ten palette entries. Construction outside 0..9 throws.
class Color {
 public:
  constexpr Color() = default;
  constexpr explicit Color(int value) : value_(checked(value)) {}

  constexpr int value() const { return value_; }

  friend constexpr auto operator<=>(Color, Color) = default;

 private:
  static constexpr std::uint8_t checked(int value) {
    if (value < 0 || value >= kNumColors) {
      throw InvalidGrid("color " + std::to_string(value) + " outside 0..9");
    }
    return static_cast<std::uint8_t>(value);
  }

  std::uint8_t value_ = 0;
};

/// Node sizes are pixel counts.
struct Size {
  int value = 0;
  friend constexpr auto operator<=>(Size, Size) = default;
};

/// Row-major coordinate. Object pixels may lie outside the grid.
struct Pixel {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(const Pixel&, const Pixel&) = default;
};

class Grid {
 public:
  /// Throws InvalidGrid unless 1 <= height, width <= 30.
  Grid(int height, int width, Color fill = Color{0});

  /// Builds a grid from nested integer rows, validating shape and palette.
  static Grid fromRows(const std::vector<std::vector<int>>& rows);

  int height() const { return height_; }
  int width() const { return width_; }

  bool contains(Pixel p) const {
    return p.row >= 0 && p.row < height_ && p.col >= 0 && p.col < width_;
  }

  Color at(int row, int col) const { return cells_[index(row, col)]; }
  Color at(Pixel p) const { return at(p.row, p.col); }
  void set(Pixel p, Color c) { cells_[index(p.row, p.col)] = c; }

  std::vector<std::vector<int>> toRows() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int row, int col) const {
    if (row < 0 || row >= height_ || col < 0 || col >= width_) {
      throw std::out_of_range("grid index (" + std::to_string(row) + "," + std::to_string(col) + ")");
    }
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int height_;
  int width_;
  std::vector<Color> cells_;
};

}  // namespace gridsynth
