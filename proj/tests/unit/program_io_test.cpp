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

#include "doctest.h"
#include "gridsynth/enumerate.hpp"
#include "gridsynth/program_io.hpp"

using namespace gridsynth;

namespace {

Program twoStepRecolor() {
  return Program{
      AbstractionKind::kConnected,
      {{FilterExpr::all(),
        TransformStep::make(TransformKind::kUpdateColor, {ParamBinding::constant(Color{1})})},
       {FilterExpr::bySize(Size{6}),
        TransformStep::make(TransformKind::kUpdateColor, {ParamBinding::constant(Color{2})})}}};
}

}  // namespace

TEST_CASE("empty program has a fixed form") {
  CHECK(serializeProgram(Program{}) == R"({"abstraction":"connected","steps":[]})");
  CHECK(parseProgram(R"({"abstraction":"connected","steps":[]})") == Program{});
}

TEST_CASE("two-step recolor program round-trips") {
  auto p = twoStepRecolor();
  auto text = serializeProgram(p);
  CHECK(parseProgram(text) == p);
  CHECK(serializeProgram(parseProgram(text)) == text);
}

TEST_CASE("malformed programs") {
  const std::string teleport =
      R"({"abstraction":"connected","steps":[{"filter":{"op":"all"},"transform":{"name":"teleport","params":[]}}]})";
  CHECK_THROWS_AS(parseProgram(teleport), MalformedProgram);
  const std::string arity =
      R"({"abstraction":"connected","steps":[{"filter":{"op":"all"},"transform":{"name":"move","params":[]}}]})";
  CHECK_THROWS_AS(parseProgram(arity), MalformedProgram);
  const std::string type =
      R"({"abstraction":"connected","steps":[{"filter":{"op":"all"},"transform":{"name":"move","params":[{"kind":"static","type":"color","value":2}]}}]})";
  CHECK_THROWS_AS(parseProgram(type), MalformedProgram);
  CHECK_THROWS_AS(parseProgram(R"({"abstraction":"diagonal","steps":[]})"), MalformedProgram);
  CHECK_THROWS_AS(parseProgram(R"({"abstraction":"connected"})"), MalformedProgram);
  CHECK_THROWS_AS(parseProgram("[]"), MalformedProgram);
  CHECK_THROWS_AS(parseProgram("{"), MalformedProgram);
  const std::string badColor =
      R"({"abstraction":"connected","steps":[{"filter":{"op":"byColor","value":11},"transform":{"name":"rotate","params":[]}}]})";
  CHECK_THROWS_AS(parseProgram(badColor), MalformedProgram);
}

TEST_CASE("property: every enumerated operation round-trips") {
  std::vector<AbstractedGraph> graphs = {
      abstractConnected(Grid::fromRows({{1, 0, 2, 2}, {0, 3, 0, 0}, {5, 5, 0, 1}}))};
  EnumerationConfig config;
  config.patterns = {PatternDef{{{{0, 0}, Color{4}}, {{1, 2}, Color{6}}}}};
  auto space = enumerateOperationSpace(graphs, config);
  REQUIRE(space.size() > 0);
  for (std::size_t i = 0; i < space.size(); i += 7) {
    Program p{AbstractionKind::kVertical, {space.at(i)}};
    auto back = parseProgram(serializeProgram(p));
    CHECK(back == p);
  }
}
