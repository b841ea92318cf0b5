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

#include "gridsynth/program_io.hpp"

#include <algorithm>

namespace gridsynth {

using nlohmann::json;

namespace {

using Op = FilterExpr::Op;

[[noreturn]] void fail(const std::string& what) { throw MalformedProgram(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing \"") + key + "\"");
  return *it;
}

std::string stringField(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) fail(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

int intValue(const json& v) {
  if (!v.is_number_integer()) fail("expected integer");
  return v.get<int>();
}

Color colorValue(const json& v) {
  try {
    return Color{intValue(v)};
  } catch (const InvalidGrid& e) {
    fail(e.what());
  }
}

Direction directionValue(const json& v) {
  if (!v.is_string()) fail("direction must be a string");
  auto d = directionFromName(v.get<std::string>());
  if (!d) fail("unknown direction \"" + v.get<std::string>() + "\"");
  return *d;
}

Pixel pixelValue(const json& v) {
  if (!v.is_array() || v.size() != 2) fail("pixel must be [row, col]");
  return {intValue(v[0]), intValue(v[1])};
}

PatternDef patternValue(const json& v) {
  if (!v.is_array() || v.empty()) fail("pattern must be a non-empty array");
  PatternDef pattern;
  for (const auto& cell : v) {
    if (!cell.is_array() || cell.size() != 3) fail("pattern cell must be [row, col, color]");
    pattern.cells.push_back({{intValue(cell[0]), intValue(cell[1])}, colorValue(cell[2])});
  }
  std::sort(pattern.cells.begin(), pattern.cells.end());
  return pattern;
}

json valueToJson(const ParamValue& value) {
  struct Visitor {
    json operator()(Color c) const { return c.value(); }
    json operator()(Size s) const { return s.value; }
    json operator()(Direction d) const { return std::string(directionName(d)); }
    json operator()(Pixel p) const { return json::array({p.row, p.col}); }
    json operator()(const PatternDef& pa) const {
      json cells = json::array();
      for (const auto& c : pa.cells) {
        cells.push_back(json::array({c.offset.row, c.offset.col, c.color.value()}));
      }
      return cells;
    }
  };
  return std::visit(Visitor{}, value);
}

ParamValue valueFromJson(std::string_view type, const json& v) {
  if (type == "color") return colorValue(v);
  if (type == "size") {
    const int s = intValue(v);
    if (s < 1) fail("size must be positive");
    return Size{s};
  }
  if (type == "direction") return directionValue(v);
  if (type == "pixel") return pixelValue(v);
  if (type == "pattern") return patternValue(v);
  fail("unknown value type \"" + std::string(type) + "\"");
}

Relation relationValue(const json& j) {
  const auto name = stringField(j, "relation");
  auto r = relationFromName(name);
  if (!r) fail("unknown relation \"" + name + "\"");
  return *r;
}

}  // namespace

json filterToJson(const FilterExpr& f) {
  json j = {{"op", std::string(filterOpName(f.op()))}};
  switch (f.op()) {
    case Op::kByColor:
    case Op::kBySize:
    case Op::kByNeighborColor:
    case Op::kByNeighborSize:
      j["value"] = f.value();
      break;
    default:
      break;
  }
  if (!f.isLeaf()) {
    j["args"] = json::array();
    for (const auto& a : f.args()) j["args"].push_back(filterToJson(a));
  }
  return j;
}

FilterExpr filterFromJson(const json& j) {
  const auto op = stringField(j, "op");
  auto args = [&](std::size_t n) {
    const auto& a = field(j, "args");
    if (!a.is_array() || a.size() != n) {
      fail("\"" + op + "\" takes " + std::to_string(n) + " argument(s)");
    }
    std::vector<FilterExpr> out;
    for (const auto& x : a) out.push_back(filterFromJson(x));
    return out;
  };
  auto size = [&] {
    const int s = intValue(field(j, "value"));
    if (s < 1) fail("size must be positive");
    return Size{s};
  };
  if (op == "all") return FilterExpr::all();
  if (op == "byColor") return FilterExpr::byColor(colorValue(field(j, "value")));
  if (op == "bySize") return FilterExpr::bySize(size());
  if (op == "byNeighborColor") return FilterExpr::byNeighborColor(colorValue(field(j, "value")));
  if (op == "byNeighborSize") return FilterExpr::byNeighborSize(size());
  if (op == "and") {
    auto a = args(2);
    return FilterExpr::both(a[0], a[1]);
  }
  if (op == "or") {
    auto a = args(2);
    return FilterExpr::either(a[0], a[1]);
  }
  if (op == "not") return FilterExpr::negate(args(1)[0]);
  if (op == "existsNeighbor") return FilterExpr::existsNeighbor(args(1)[0]);
  if (op == "forAllNeighbors") return FilterExpr::forAllNeighbors(args(1)[0]);
  fail("unknown filter \"" + op + "\"");
}

json bindingToJson(const ParamBinding& b) {
  switch (b.kind()) {
    case ParamBinding::Kind::kStatic:
      return {{"kind", "static"},
              {"type", std::string(valueTypeName(valueTypeOf(b.value())))},
              {"value", valueToJson(b.value())}};
    case ParamBinding::Kind::kOwn:
      return {{"kind", "own"}, {"relation", std::string(relationName(b.relation()))}};
    case ParamBinding::Kind::kNeighbor:
      return {{"kind", "neighbor"},
              {"relation", std::string(relationName(b.relation()))},
              {"filter", filterToJson(*b.filter())}};
  }
  return {};
}

ParamBinding bindingFromJson(const json& j) {
  const auto kind = stringField(j, "kind");
  if (kind == "static") {
    return ParamBinding::constant(valueFromJson(stringField(j, "type"), field(j, "value")));
  }
  if (kind == "own") return ParamBinding::own(relationValue(j));
  if (kind == "neighbor") {
    return ParamBinding::neighbor(filterFromJson(field(j, "filter")), relationValue(j));
  }
  fail("unknown binding kind \"" + kind + "\"");
}

json programToJson(const Program& program) {
  json steps = json::array();
  for (const auto& op : program.steps) {
    json params = json::array();
    for (const auto& p : op.transform.params) params.push_back(bindingToJson(p));
    steps.push_back({{"filter", filterToJson(op.filter)},
                     {"transform",
                      {{"name", std::string(transformName(op.transform.kind))},
                       {"params", std::move(params)}}}});
  }
  return {{"abstraction", std::string(abstractionName(program.abstraction))},
          {"steps", std::move(steps)}};
}

Program programFromJson(const json& j) {
  Program program;
  const auto name = stringField(j, "abstraction");
  auto kind = abstractionFromName(name);
  if (!kind) fail("unknown abstraction \"" + name + "\"");
  program.abstraction = *kind;

  const auto& steps = field(j, "steps");
  if (!steps.is_array()) fail("\"steps\" must be an array");
  for (const auto& s : steps) {
    FilterExpr filter = filterFromJson(field(s, "filter"));
    const auto& t = field(s, "transform");
    const auto& params = field(t, "params");
    if (!params.is_array()) fail("\"params\" must be an array");
    std::vector<ParamBinding> bindings;
    for (const auto& p : params) bindings.push_back(bindingFromJson(p));
    try {
      auto step = TransformStep::make(transformFromName(stringField(t, "name")),
                                      std::move(bindings));
      program.steps.push_back({std::move(filter), std::move(step)});
    } catch (const UnknownTransform& e) {
      fail(e.what());
    } catch (const ArityMismatch& e) {
      fail(e.what());
    }
  }
  return program;
}

std::string serializeProgram(const Program& program) { return programToJson(program).dump(); }

Program parseProgram(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  return programFromJson(j);
}

}  // namespace gridsynth
