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

#include "gridsynth/dsl.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace gridsynth {

// ---------------------------------------------------------------------------
// Directions

std::string_view directionName(Direction d) {
  switch (d) {
    case Direction::kUp:
      return "up";
    case Direction::kDown:
      return "down";
    case Direction::kLeft:
      return "left";
    case Direction::kRight:
      return "right";
    case Direction::kUpLeft:
      return "up-left";
    case Direction::kUpRight:
      return "up-right";
    case Direction::kDownLeft:
      return "down-left";
    case Direction::kDownRight:
      return "down-right";
  }
  return "unknown";
}

std::optional<Direction> directionFromName(std::string_view name) {
  for (auto d : kAllDirections) {
    if (directionName(d) == name) return d;
  }
  return std::nullopt;
}

Pixel directionStep(Direction d) {
  switch (d) {
    case Direction::kUp:
      return {-1, 0};
    case Direction::kDown:
      return {1, 0};
    case Direction::kLeft:
      return {0, -1};
    case Direction::kRight:
      return {0, 1};
    case Direction::kUpLeft:
      return {-1, -1};
    case Direction::kUpRight:
      return {-1, 1};
    case Direction::kDownLeft:
      return {1, -1};
    case Direction::kDownRight:
      return {1, 1};
  }
  return {0, 0};
}

// ---------------------------------------------------------------------------
// Filters

FilterExpr FilterExpr::make(Op op, int value, std::vector<FilterExpr> args) {
  return FilterExpr(std::make_shared<const Node>(Node{op, value, std::move(args)}));
}

FilterExpr FilterExpr::all() { return make(Op::kAll, 0, {}); }
FilterExpr FilterExpr::byColor(Color c) { return make(Op::kByColor, c.value(), {}); }
FilterExpr FilterExpr::bySize(Size s) { return make(Op::kBySize, s.value, {}); }
FilterExpr FilterExpr::byNeighborColor(Color c) {
  return make(Op::kByNeighborColor, c.value(), {});
}
FilterExpr FilterExpr::byNeighborSize(Size s) { return make(Op::kByNeighborSize, s.value, {}); }
FilterExpr FilterExpr::both(FilterExpr a, FilterExpr b) {
  return make(Op::kAnd, 0, {std::move(a), std::move(b)});
}
FilterExpr FilterExpr::either(FilterExpr a, FilterExpr b) {
  return make(Op::kOr, 0, {std::move(a), std::move(b)});
}
FilterExpr FilterExpr::negate(FilterExpr f) { return make(Op::kNot, 0, {std::move(f)}); }
FilterExpr FilterExpr::existsNeighbor(FilterExpr f) {
  return make(Op::kExistsNeighbor, 0, {std::move(f)});
}
FilterExpr FilterExpr::forAllNeighbors(FilterExpr f) {
  return make(Op::kForAllNeighbors, 0, {std::move(f)});
}

int FilterExpr::depth() const {
  int deepest = 0;
  for (const auto& a : args()) deepest = std::max(deepest, a.depth());
  return deepest + 1;
}

std::string_view filterOpName(FilterExpr::Op op) {
  using Op = FilterExpr::Op;
  switch (op) {
    case Op::kAll:
      return "all";
    case Op::kByColor:
      return "byColor";
    case Op::kBySize:
      return "bySize";
    case Op::kByNeighborColor:
      return "byNeighborColor";
    case Op::kByNeighborSize:
      return "byNeighborSize";
    case Op::kAnd:
      return "and";
    case Op::kOr:
      return "or";
    case Op::kNot:
      return "not";
    case Op::kExistsNeighbor:
      return "existsNeighbor";
    case Op::kForAllNeighbors:
      return "forAllNeighbors";
  }
  return "unknown";
}

std::string FilterExpr::key() const {
  std::string out(filterOpName(op()));
  switch (op()) {
    case Op::kByColor:
    case Op::kBySize:
    case Op::kByNeighborColor:
    case Op::kByNeighborSize:
      out += "=" + std::to_string(value());
      break;
    default:
      break;
  }
  if (!isLeaf()) {
    out += "(";
    for (std::size_t i = 0; i < args().size(); ++i) {
      if (i) out += ",";
      out += args()[i].key();
    }
    out += ")";
  }
  return out;
}

bool operator==(const FilterExpr& a, const FilterExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.value() != b.value() || a.args().size() != b.args().size()) {
    return false;
  }
  return std::equal(a.args().begin(), a.args().end(), b.args().begin());
}

bool evalFilter(const FilterExpr& f, const AbstractedGraph& g, std::size_t nodeIndex) {
  using Op = FilterExpr::Op;
  const ObjectNode& n = g.nodes()[nodeIndex];
  auto neighbors = g.neighbors(nodeIndex);
  switch (f.op()) {
    case Op::kAll:
      return true;
    case Op::kByColor:
      return n.color.value() == f.value();
    case Op::kBySize:
      return n.size().value == f.value();
    case Op::kByNeighborColor:
      return std::any_of(neighbors.begin(), neighbors.end(),
                         [&](auto j) { return g.nodes()[j].color.value() == f.value(); });
    case Op::kByNeighborSize:
      return std::any_of(neighbors.begin(), neighbors.end(),
                         [&](auto j) { return g.nodes()[j].size().value == f.value(); });
    case Op::kAnd:
      return evalFilter(f.args()[0], g, nodeIndex) && evalFilter(f.args()[1], g, nodeIndex);
    case Op::kOr:
      return evalFilter(f.args()[0], g, nodeIndex) || evalFilter(f.args()[1], g, nodeIndex);
    case Op::kNot:
      return !evalFilter(f.args()[0], g, nodeIndex);
    case Op::kExistsNeighbor:
      return std::any_of(neighbors.begin(), neighbors.end(),
                         [&](auto j) { return evalFilter(f.args()[0], g, j); });
    case Op::kForAllNeighbors:
      return std::all_of(neighbors.begin(), neighbors.end(),
                         [&](auto j) { return evalFilter(f.args()[0], g, j); });
  }
  return false;
}

bool evalFilter(const FilterExpr& f, const AbstractedGraph& g, const ObjectNode& n) {
  auto index = g.indexOf(n.id);
  if (!index) throw std::invalid_argument("node " + std::to_string(n.id) + " not in graph");
  return evalFilter(f, g, *index);
}

std::vector<std::size_t> selectNodes(const FilterExpr& f, const AbstractedGraph& g) {
  std::vector<std::size_t> matched;
  for (std::size_t i = 0; i < g.nodes().size(); ++i) {
    if (evalFilter(f, g, i)) matched.push_back(i);
  }
  return matched;
}

// ---------------------------------------------------------------------------
// Parameter bindings

std::string_view valueTypeName(ValueType t) {
  switch (t) {
    case ValueType::kColor:
      return "color";
    case ValueType::kSize:
      return "size";
    case ValueType::kDirection:
      return "direction";
    case ValueType::kPixel:
      return "pixel";
    case ValueType::kPattern:
      return "pattern";
  }
  return "unknown";
}

std::string_view relationName(Relation r) {
  switch (r) {
    case Relation::kColor:
      return "color";
    case Relation::kSize:
      return "size";
    case Relation::kDirection:
      return "direction";
    case Relation::kPosition:
      return "position";
  }
  return "unknown";
}

std::optional<Relation> relationFromName(std::string_view name) {
  for (auto r : {Relation::kColor, Relation::kSize, Relation::kDirection, Relation::kPosition}) {
    if (relationName(r) == name) return r;
  }
  return std::nullopt;
}

ValueType relationType(Relation r) {
  switch (r) {
    case Relation::kColor:
      return ValueType::kColor;
    case Relation::kSize:
      return ValueType::kSize;
    case Relation::kDirection:
      return ValueType::kDirection;
    case Relation::kPosition:
      return ValueType::kPixel;
  }
  return ValueType::kColor;
}

ValueType valueTypeOf(const ParamValue& v) {
  static constexpr std::array kTypes = {ValueType::kColor, ValueType::kSize,
                                        ValueType::kDirection, ValueType::kPixel,
                                        ValueType::kPattern};
  return kTypes[v.index()];
}

ParamBinding ParamBinding::constant(ParamValue value) {
  return ParamBinding(Kind::kStatic, std::move(value), Relation::kColor, std::nullopt);
}

ParamBinding ParamBinding::own(Relation relation) {
  return ParamBinding(Kind::kOwn, Color{}, relation, std::nullopt);
}

ParamBinding ParamBinding::neighbor(FilterExpr filter, Relation relation) {
  return ParamBinding(Kind::kNeighbor, Color{}, relation, std::move(filter));
}

ValueType ParamBinding::valueType() const {
  return kind_ == Kind::kStatic ? valueTypeOf(value_) : relationType(relation_);
}

namespace {

std::string valueKey(const ParamValue& v) {
  struct Visitor {
    std::string operator()(Color c) const { return "color=" + std::to_string(c.value()); }
    std::string operator()(Size s) const { return "size=" + std::to_string(s.value); }
    std::string operator()(Direction d) const { return std::string(directionName(d)); }
    std::string operator()(Pixel p) const {
      return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
    }
    std::string operator()(const PatternDef& pa) const {
      std::string out = "pattern[";
      for (const auto& cell : pa.cells) {
        out += std::to_string(cell.offset.row) + ":" + std::to_string(cell.offset.col) + ":" +
               std::to_string(cell.color.value()) + ";";
      }
      return out + "]";
    }
  };
  return std::visit(Visitor{}, v);
}

Pixel floorCenter(const BoundingBox& box) {
  auto floorHalf = [](int sum) { return sum >= 0 ? sum / 2 : -((-sum + 1) / 2); };
  return {floorHalf(box.minRow + box.maxRow), floorHalf(box.minCol + box.maxCol)};
}

std::optional<Direction> directionToward(const ObjectNode& from, const ObjectNode& to) {
  const auto a = from.bounds();
  const auto b = to.bounds();
  const int vertical = b.maxRow < a.minRow ? -1 : (b.minRow > a.maxRow ? 1 : 0);
  const int horizontal = b.maxCol < a.minCol ? -1 : (b.minCol > a.maxCol ? 1 : 0);
  for (auto d : kAllDirections) {
    const auto step = directionStep(d);
    if (step.row == vertical && step.col == horizontal) return d;
  }
  return std::nullopt;
}

std::optional<ParamValue> relationValue(Relation r, const ObjectNode& self,
                                        const ObjectNode& other) {
  switch (r) {
    case Relation::kColor:
      return other.color;
    case Relation::kSize:
      return other.size();
    case Relation::kPosition:
      return floorCenter(other.bounds());
    case Relation::kDirection:
      if (&self == &other) return std::nullopt;
      if (auto d = directionToward(self, other)) return *d;
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::string ParamBinding::key() const {
  switch (kind_) {
    case Kind::kStatic:
      return valueKey(value_);
    case Kind::kOwn:
      return "own." + std::string(relationName(relation_));
    case Kind::kNeighbor:
      return "neighbor[" + filter_->key() + "]." + std::string(relationName(relation_));
  }
  return {};
}

bool operator==(const ParamBinding& a, const ParamBinding& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case ParamBinding::Kind::kStatic:
      return a.value_ == b.value_;
    case ParamBinding::Kind::kOwn:
      return a.relation_ == b.relation_;
    case ParamBinding::Kind::kNeighbor:
      return a.relation_ == b.relation_ && *a.filter_ == *b.filter_;
  }
  return false;
}

std::optional<ParamValue> bindParam(const ParamBinding& p, const AbstractedGraph& g,
                                    std::size_t nodeIndex) {
  const ObjectNode& n = g.nodes()[nodeIndex];
  switch (p.kind()) {
    case ParamBinding::Kind::kStatic:
      return p.value();
    case ParamBinding::Kind::kOwn:
      return relationValue(p.relation(), n, n);
    case ParamBinding::Kind::kNeighbor: {
      std::optional<ParamValue> best;
      for (auto j : g.neighbors(nodeIndex)) {
        if (!evalFilter(*p.filter(), g, j)) continue;
        auto v = relationValue(p.relation(), n, g.nodes()[j]);
        if (v && (!best || *v < *best)) best = std::move(v);
      }
      return best;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Transformations

namespace {

struct TransformInfo {
  TransformKind kind;
  std::string_view name;
  std::vector<ValueType> signature;
};

const std::vector<TransformInfo>& transformTable() {
  static const std::vector<TransformInfo> table = {
      {TransformKind::kUpdateColor, "updateColor", {ValueType::kColor}},
      {TransformKind::kMove, "move", {ValueType::kDirection}},
      {TransformKind::kMoveMax, "moveMax", {ValueType::kDirection}},
      {TransformKind::kRotate, "rotate", {}},
      {TransformKind::kFillRectangle, "fillRectangle", {ValueType::kColor}},
      {TransformKind::kHollowRectangle, "hollowRectangle", {ValueType::kColor}},
      {TransformKind::kAddBorder, "addBorder", {ValueType::kColor}},
      {TransformKind::kInsertPattern, "insertPattern", {ValueType::kPattern}},
      {TransformKind::kMirror, "mirror", {ValueType::kPixel, ValueType::kDirection}},
      {TransformKind::kExtend, "extend", {ValueType::kDirection}},
      {TransformKind::kFlip, "flip", {ValueType::kDirection}},
  };
  return table;
}

const TransformInfo& info(TransformKind t) {
  return transformTable()[static_cast<std::size_t>(t)];
}

void checkValues(TransformKind t, std::span<const ParamValue> values) {
  const auto& sig = info(t).signature;
  if (values.size() != sig.size()) {
    throw ArityMismatch(std::string(info(t).name) + " takes " + std::to_string(sig.size()) +
                        " parameters, got " + std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (valueTypeOf(values[i]) != sig[i]) {
      throw ArityMismatch(std::string(info(t).name) + " parameter " + std::to_string(i + 1) +
                          " expects " + std::string(valueTypeName(sig[i])));
    }
  }
}

// Mutable node set used while an operation is applied.
class Working {
 public:
  explicit Working(const AbstractedGraph& g)
      : source_(g), nodes_(g.nodes().begin(), g.nodes().end()), nextId_(g.nextId()) {}

  std::optional<std::size_t> find(NodeId id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                               [](const ObjectNode& n, NodeId v) { return n.id < v; });
    if (it == nodes_.end() || it->id != id) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
  }

  const ObjectNode& node(std::size_t i) const { return nodes_[i]; }
  int height() const { return source_.height(); }
  int width() const { return source_.width(); }
  bool inBounds(Pixel p) const {
    return p.row >= 0 && p.row < height() && p.col >= 0 && p.col < width();
  }

  // Per-cell count of covering nodes, optionally ignoring one node.
  std::vector<std::uint16_t> occupancy(std::optional<std::size_t> except = std::nullopt) const {
    std::vector<std::uint16_t> occ(static_cast<std::size_t>(height() * width()), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (except && *except == i) continue;
      for (const auto& p : nodes_[i].pixels) {
        if (inBounds(p)) ++occ[cell(p)];
      }
    }
    return occ;
  }
  std::size_t cell(Pixel p) const {
    return static_cast<std::size_t>(p.row * width() + p.col);
  }

  // Returns false when the replacement equals the current node.
  bool replace(std::size_t i, std::vector<Pixel> pixels, Color color) {
    normalizePixels(pixels);
    if (pixels == nodes_[i].pixels && color == nodes_[i].color) return false;
    nodes_.erase(nodes_.begin() + static_cast<std::ptrdiff_t>(i));
    if (!pixels.empty()) nodes_.push_back(ObjectNode{nextId_++, color, std::move(pixels)});
    changed_ = true;
    return true;
  }

  bool add(std::vector<Pixel> pixels, Color color) {
    if (pixels.empty()) return false;
    normalizePixels(pixels);
    nodes_.push_back(ObjectNode{nextId_++, color, std::move(pixels)});
    changed_ = true;
    return true;
  }

  bool changed() const { return changed_; }

  AbstractedGraph finish() && {
    if (!changed_) return source_;
    return AbstractedGraph(source_.kind(), source_.height(), source_.width(),
                           source_.background(), std::move(nodes_), nextId_);
  }

 private:
  const AbstractedGraph& source_;
  std::vector<ObjectNode> nodes_;
  NodeId nextId_;
  bool changed_ = false;
};

std::vector<Pixel> shifted(const std::vector<Pixel>& pixels, Pixel by) {
  std::vector<Pixel> out;
  out.reserve(pixels.size());
  for (const auto& p : pixels) out.push_back({p.row + by.row, p.col + by.col});
  return out;
}

bool moveMax(Working& w, std::size_t i, Direction d) {
  const auto occ = w.occupancy(i);
  const auto& pixels = w.node(i).pixels;
  const Pixel step = directionStep(d);
  const int limit = 2 * (w.height() + w.width());
  int steps = 0;
  for (int k = 1; k <= limit; ++k) {
    bool ok = true;
    for (const auto& p : pixels) {
      Pixel q{p.row + k * step.row, p.col + k * step.col};
      if (!w.inBounds(q) || occ[w.cell(q)] > 0) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    steps = k;
  }
  if (steps == 0) return false;
  return w.replace(i, shifted(pixels, {steps * step.row, steps * step.col}), w.node(i).color);
}

bool extend(Working& w, std::size_t i, Direction d) {
  const auto occ = w.occupancy(i);
  const Pixel step = directionStep(d);
  std::vector<Pixel> pixels = w.node(i).pixels;
  const std::size_t original = pixels.size();
  for (std::size_t k = 0; k < original; ++k) {
    Pixel q{pixels[k].row + step.row, pixels[k].col + step.col};
    while (w.inBounds(q) && occ[w.cell(q)] == 0) {
      pixels.push_back(q);
      q = {q.row + step.row, q.col + step.col};
    }
  }
  return w.replace(i, std::move(pixels), w.node(i).color);
}

bool rotate(Working& w, std::size_t i) {
  const auto& node = w.node(i);
  const Pixel center = floorCenter(node.bounds());
  std::vector<Pixel> out;
  out.reserve(node.pixels.size());
  for (const auto& p : node.pixels) {
    out.push_back({center.row + (p.col - center.col), center.col - (p.row - center.row)});
  }
  return w.replace(i, std::move(out), node.color);
}

bool flip(Working& w, std::size_t i, Direction d) {
  const auto& node = w.node(i);
  const auto box = node.bounds();
  const Pixel step = directionStep(d);
  std::vector<Pixel> out;
  out.reserve(node.pixels.size());
  for (const auto& p : node.pixels) {
    Pixel q = p;
    if (step.row != 0) q.row = box.minRow + box.maxRow - p.row;
    if (step.col != 0) q.col = box.minCol + box.maxCol - p.col;
    out.push_back(q);
  }
  return w.replace(i, std::move(out), node.color);
}

// Reflection across the line through `axis` perpendicular to `d`.
bool mirror(Working& w, std::size_t i, Pixel axis, Direction d) {
  const auto& node = w.node(i);
  const Pixel v = directionStep(d);
  const int norm = v.row * v.row + v.col * v.col;
  std::vector<Pixel> out;
  out.reserve(node.pixels.size());
  for (const auto& p : node.pixels) {
    const int dr = p.row - axis.row;
    const int dc = p.col - axis.col;
    const int dot = dr * v.row + dc * v.col;
    // norm is 1 or 2, so 2 * dot / norm is exact.
    const int scale = 2 * dot / norm;
    out.push_back({p.row - scale * v.row, p.col - scale * v.col});
  }
  return w.replace(i, std::move(out), node.color);
}

std::vector<Pixel> interior(const Working& w, const BoundingBox& box) {
  std::vector<Pixel> cells;
  for (int r = box.minRow + 1; r < box.maxRow; ++r) {
    for (int c = box.minCol + 1; c < box.maxCol; ++c) {
      if (w.inBounds({r, c})) cells.push_back({r, c});
    }
  }
  return cells;
}

bool fillRectangle(Working& w, std::size_t i, Color color) {
  const auto occ = w.occupancy();
  std::vector<Pixel> cells;
  for (const auto& p : interior(w, w.node(i).bounds())) {
    if (occ[w.cell(p)] == 0) cells.push_back(p);
  }
  return w.add(std::move(cells), color);
}

bool hollowRectangle(Working& w, std::size_t i, Color color) {
  auto cells = interior(w, w.node(i).bounds());
  if (cells.empty()) return false;
  std::vector<Pixel> rest;
  for (const auto& p : w.node(i).pixels) {
    if (!std::binary_search(cells.begin(), cells.end(), p)) rest.push_back(p);
  }
  const Color own = w.node(i).color;
  w.replace(i, std::move(rest), own);
  return w.add(std::move(cells), color);
}

bool addBorder(Working& w, std::size_t i, Color color) {
  const auto occ = w.occupancy();
  std::vector<Pixel> cells;
  for (const auto& p : w.node(i).pixels) {
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        Pixel q{p.row + dr, p.col + dc};
        if (w.inBounds(q) && occ[w.cell(q)] == 0) cells.push_back(q);
      }
    }
  }
  return w.add(std::move(cells), color);
}

bool insertPattern(Working& w, std::size_t i, const PatternDef& pattern) {
  const auto box = w.node(i).bounds();
  std::map<Color, std::vector<Pixel>> byColor;
  for (const auto& cell : pattern.cells) {
    byColor[cell.color].push_back({box.minRow + cell.offset.row, box.minCol + cell.offset.col});
  }
  bool any = false;
  for (auto& [color, pixels] : byColor) any = w.add(std::move(pixels), color) || any;
  return any;
}

bool transformNode(Working& w, std::size_t i, TransformKind t, std::span<const ParamValue> v) {
  switch (t) {
    case TransformKind::kUpdateColor:
      return w.replace(i, w.node(i).pixels, std::get<Color>(v[0]));
    case TransformKind::kMove:
      return w.replace(i, shifted(w.node(i).pixels, directionStep(std::get<Direction>(v[0]))),
                       w.node(i).color);
    case TransformKind::kMoveMax:
      return moveMax(w, i, std::get<Direction>(v[0]));
    case TransformKind::kRotate:
      return rotate(w, i);
    case TransformKind::kFillRectangle:
      return fillRectangle(w, i, std::get<Color>(v[0]));
    case TransformKind::kHollowRectangle:
      return hollowRectangle(w, i, std::get<Color>(v[0]));
    case TransformKind::kAddBorder:
      return addBorder(w, i, std::get<Color>(v[0]));
    case TransformKind::kInsertPattern:
      return insertPattern(w, i, std::get<PatternDef>(v[0]));
    case TransformKind::kMirror:
      return mirror(w, i, std::get<Pixel>(v[0]), std::get<Direction>(v[1]));
    case TransformKind::kExtend:
      return extend(w, i, std::get<Direction>(v[0]));
    case TransformKind::kFlip:
      return flip(w, i, std::get<Direction>(v[0]));
  }
  return false;
}

}  // namespace

std::string_view transformName(TransformKind t) { return info(t).name; }

TransformKind transformFromName(std::string_view name) {
  for (const auto& entry : transformTable()) {
    if (entry.name == name) return entry.kind;
  }
  throw UnknownTransform("unknown transformation \"" + std::string(name) + "\"");
}

std::span<const ValueType> transformSignature(TransformKind t) { return info(t).signature; }

TransformStep TransformStep::make(TransformKind kind, std::vector<ParamBinding> params) {
  const auto sig = transformSignature(kind);
  if (params.size() != sig.size()) {
    throw ArityMismatch(std::string(transformName(kind)) + " takes " +
                        std::to_string(sig.size()) + " parameters, got " +
                        std::to_string(params.size()));
  }
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (params[i].valueType() != sig[i]) {
      throw ArityMismatch(std::string(transformName(kind)) + " parameter " +
                          std::to_string(i + 1) + " expects " +
                          std::string(valueTypeName(sig[i])));
    }
  }
  return TransformStep{kind, std::move(params)};
}

std::string TransformStep::key() const {
  std::string out(transformName(kind));
  out += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += params[i].key();
  }
  return out + ")";
}

std::string FullOperation::key() const { return filter.key() + " -> " + transform.key(); }

AbstractedGraph applyTransform(const AbstractedGraph& g, NodeId id, TransformKind t,
                               std::span<const ParamValue> values) {
  checkValues(t, values);
  Working w(g);
  auto index = w.find(id);
  if (!index) throw std::invalid_argument("node " + std::to_string(id) + " not in graph");
  transformNode(w, *index, t, values);
  return std::move(w).finish();
}

AbstractedGraph applyTransform(const AbstractedGraph& g, NodeId id, std::string_view name,
                               std::span<const ParamValue> values) {
  return applyTransform(g, id, transformFromName(name), values);
}

OperationResult applyToNodes(const AbstractedGraph& g, std::span<const std::size_t> nodeIndices,
                             const TransformStep& step) {
  Working w(g);
  std::vector<ParamValue> values;
  for (auto index : nodeIndices) {
    values.clear();
    bool bound = true;
    for (const auto& p : step.params) {
      auto v = bindParam(p, g, index);
      if (!v) {
        bound = false;
        break;
      }
      values.push_back(std::move(*v));
    }
    if (!bound) continue;
    auto current = w.find(g.nodes()[index].id);
    if (!current) continue;
    checkValues(step.kind, values);
    transformNode(w, *current, step.kind, values);
  }
  const bool effective = w.changed();
  return {std::move(w).finish(), effective};
}

OperationResult applyOperation(const FullOperation& op, const AbstractedGraph& g) {
  const auto matched = selectNodes(op.filter, g);
  return applyToNodes(g, matched, op.transform);
}

Grid applyProgram(const Program& program, const Grid& grid) {
  AbstractedGraph graph = abstractGrid(grid, program.abstraction);
  for (const auto& step : program.steps) graph = applyOperation(step, graph).graph;
  return reconstruct(graph);
}

}  // namespace gridsynth
