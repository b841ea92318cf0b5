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

#include "gridsynth/render.hpp"

#include <array>
#include <stdexcept>

namespace gridsynth {

namespace {

constexpr std::string_view kGlyphs = ".123456789";

struct Rgb {
  unsigned char r, g, b;
};

// Conventional ARC palette.
constexpr std::array<Rgb, kNumColors> kPalette = {{
    {0x00, 0x00, 0x00},
    {0x00, 0x74, 0xD9},
    {0xFF, 0x41, 0x36},
    {0x2E, 0xCC, 0x40},
    {0xFF, 0xDC, 0x00},
    {0xAA, 0xAA, 0xAA},
    {0xF0, 0x12, 0xBE},
    {0xFF, 0x85, 0x1B},
    {0x7F, 0xDB, 0xFF},
    {0x87, 0x0C, 0x25},
}};

}  // namespace

std::string renderGrid(const Grid& grid, RenderMode mode, int scale) {
  std::string out;
  if (mode == RenderMode::kAscii) {
    out.reserve(static_cast<std::size_t>(grid.height() * (grid.width() + 1)));
    for (int r = 0; r < grid.height(); ++r) {
      for (int c = 0; c < grid.width(); ++c) out += kGlyphs[grid.at(r, c).value()];
      out += '\n';
    }
    return out;
  }

  if (scale < 1) throw std::invalid_argument("render scale must be positive");
  const int w = grid.width() * scale;
  const int h = grid.height() * scale;
  out = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(w) * h * 3);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto& rgb = kPalette[grid.at(y / scale, x / scale).value()];
      out += static_cast<char>(rgb.r);
      out += static_cast<char>(rgb.g);
      out += static_cast<char>(rgb.b);
    }
  }
  return out;
}

}  // namespace gridsynth
