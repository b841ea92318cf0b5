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

#include <string>
#include <string_view>

#include "gridsynth/grid.hpp"

namespace gridsynth {

enum class RenderMode : std::uint8_t { kAscii, kImage };

/// kAscii: one line per row, glyphs ".123456789". kImage: binary PPM (P6)
/// with each cell drawn as a `scale` x `scale` block.
std::string renderGrid(const Grid& grid, RenderMode mode, int scale = 10);

}  // namespace gridsynth
