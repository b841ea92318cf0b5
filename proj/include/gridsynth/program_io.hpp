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

#include <stdexcept>
#include <string>
#include <string_view>

#include "gridsynth/dsl.hpp"
#include "json.hpp"

namespace gridsynth {

/// Unknown names, arity or type mismatches, or structurally invalid JSON.
class MalformedProgram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json filterToJson(const FilterExpr& f);
FilterExpr filterFromJson(const nlohmann::json& j);

nlohmann::json bindingToJson(const ParamBinding& b);
ParamBinding bindingFromJson(const nlohmann::json& j);

nlohmann::json programToJson(const Program& program);
Program programFromJson(const nlohmann::json& j);

/// Canonical compact form:
/// `{"abstraction":...,"steps":[{"filter":...,"transform":{"name":...,"params":[...]}}]}`
std::string serializeProgram(const Program& program);
Program parseProgram(std::string_view text);

}  // namespace gridsynth
