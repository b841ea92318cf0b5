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

#include "gridsynth/task_io.hpp"

#include <fstream>
#include <sstream>

namespace gridsynth {

using nlohmann::json;

Grid gridFromJson(const json& value) {
  if (!value.is_array() || value.empty()) {
    throw InvalidGrid("grid must be a non-empty array of rows");
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(value.size());
  for (const auto& row : value) {
    if (!row.is_array()) throw InvalidGrid("grid row is not an array");
    auto& out = rows.emplace_back();
    out.reserve(row.size());
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) throw InvalidGrid("grid cell is not an integer");
      out.push_back(cell.get<int>());
    }
  }
  return Grid::fromRows(rows);
}

json gridToJson(const Grid& grid) { return json(grid.toRows()); }

namespace {

const json& requireArray(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_array() || it->empty()) {
    throw MalformedDocument(std::string("missing or empty \"") + key + "\" list");
  }
  return *it;
}

const json& requireGrid(const json& entry, const char* key) {
  if (!entry.is_object()) throw MalformedDocument("task entry is not an object");
  auto it = entry.find(key);
  if (it == entry.end()) throw MalformedDocument(std::string("entry without \"") + key + "\"");
  return *it;
}

}  // namespace

Task parseTask(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw MalformedDocument(e.what());
  }
  if (!doc.is_object()) throw MalformedDocument("task document is not an object");

  Task task;
  for (const auto& entry : requireArray(doc, "train")) {
    task.train.push_back({gridFromJson(requireGrid(entry, "input")),
                          gridFromJson(requireGrid(entry, "output"))});
  }
  for (const auto& entry : requireArray(doc, "test")) {
    TestCase test{gridFromJson(requireGrid(entry, "input")), std::nullopt};
    if (auto it = entry.find("output"); it != entry.end()) test.output = gridFromJson(*it);
    task.test.push_back(std::move(test));
  }
  return task;
}

Task loadTask(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseTask(buffer.str());
}

std::string serializePrediction(const Grid& grid) { return gridToJson(grid).dump(); }

std::string serializeTask(const Task& task) {
  json doc;
  doc["train"] = json::array();
  for (const auto& ex : task.train) {
    doc["train"].push_back({{"input", gridToJson(ex.input)}, {"output", gridToJson(ex.output)}});
  }
  doc["test"] = json::array();
  for (const auto& t : task.test) {
    json entry = {{"input", gridToJson(t.input)}};
    if (t.output) entry["output"] = gridToJson(*t.output);
    doc["test"].push_back(std::move(entry));
  }
  return doc.dump();
}

}  // namespace gridsynth
