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

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gridsynth/abstraction.hpp"
#include "gridsynth/grid.hpp"

namespace gridsynth {

enum class Direction : std::uint8_t {
  kUp,
  kDown,
  kLeft,
  kRight,
  kUpLeft,
  kUpRight,
  kDownLeft,
  kDownRight,
};

inline constexpr std::array kCardinalDirections = {Direction::kUp, Direction::kDown,
                                                   Direction::kLeft, Direction::kRight};
inline constexpr std::array kAllDirections = {
    Direction::kUp,     Direction::kDown,     Direction::kLeft,     Direction::kRight,
    Direction::kUpLeft, Direction::kUpRight, Direction::kDownLeft, Direction::kDownRight};

std::string_view directionName(Direction d);
std::optional<Direction> directionFromName(std::string_view name);
Pixel directionStep(Direction d);

/// Colored offsets relative to a node's bounding-box top-left.
struct PatternDef {
  struct Cell {
    Pixel offset;
    Color color;
    friend auto operator<=>(const Cell&, const Cell&) = default;
  };
  // Sorted by (offset, color); never empty.
  std::vector<Cell> cells;

  friend auto operator<=>(const PatternDef&, const PatternDef&) = default;
};

// ---------------------------------------------------------------------------
// Filters

/// Immutable first-order predicate over the nodes of a graph.
class FilterExpr {
 public:
  enum class Op : std::uint8_t {
    kAll,  // Node(x); selects every node
    kByColor,
    kBySize,
    kByNeighborColor,
    kByNeighborSize,
    kAnd,
    kOr,
    kNot,
    kExistsNeighbor,
    kForAllNeighbors,
  };

  static FilterExpr all();
  static FilterExpr byColor(Color c);
  static FilterExpr bySize(Size s);
  static FilterExpr byNeighborColor(Color c);
  static FilterExpr byNeighborSize(Size s);
  static FilterExpr both(FilterExpr a, FilterExpr b);
  static FilterExpr either(FilterExpr a, FilterExpr b);
  static FilterExpr negate(FilterExpr f);
  static FilterExpr existsNeighbor(FilterExpr f);
  static FilterExpr forAllNeighbors(FilterExpr f);

  Op op() const { return node_->op; }
  /// Color or size constant of a leaf.
  int value() const { return node_->value; }
  std::span<const FilterExpr> args() const { return node_->args; }

  bool isLeaf() const { return node_->args.empty(); }
  int depth() const;

  /// Canonical text, e.g. `not(size=6)`; equal keys iff equal trees.
  std::string key() const;

  friend bool operator==(const FilterExpr& a, const FilterExpr& b);

 private:
  struct Node {
    Op op;
    int value;
    std::vector<FilterExpr> args;
  };
  explicit FilterExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static FilterExpr make(Op op, int value, std::vector<FilterExpr> args);

  std::shared_ptr<const Node> node_;
};

std::string_view filterOpName(FilterExpr::Op op);

bool evalFilter(const FilterExpr& f, const AbstractedGraph& g, std::size_t nodeIndex);
bool evalFilter(const FilterExpr& f, const AbstractedGraph& g, const ObjectNode& n);

/// Indices of matching nodes, ascending.
std::vector<std::size_t> selectNodes(const FilterExpr& f, const AbstractedGraph& g);

// ---------------------------------------------------------------------------
// Parameter bindings

enum class ValueType : std::uint8_t { kColor, kSize, kDirection, kPixel, kPattern };

/// Node relations usable as dynamic parameter sources.
enum class Relation : std::uint8_t {
  kColor,
  kSize,
  kDirection,  // from the bound node toward the related node
  kPosition,   // bounding-box center, floored
};

std::string_view valueTypeName(ValueType t);
std::string_view relationName(Relation r);
std::optional<Relation> relationFromName(std::string_view name);
ValueType relationType(Relation r);

using ParamValue = std::variant<Color, Size, Direction, Pixel, PatternDef>;

ValueType valueTypeOf(const ParamValue& v);

class ParamBinding {
 public:
  enum class Kind : std::uint8_t { kStatic, kOwn, kNeighbor };

  static ParamBinding constant(ParamValue value);
  static ParamBinding own(Relation relation);
  static ParamBinding neighbor(FilterExpr filter, Relation relation);

  Kind kind() const { return kind_; }
  const ParamValue& value() const { return value_; }
  Relation relation() const { return relation_; }
  /// Present for kNeighbor only.
  const std::optional<FilterExpr>& filter() const { return filter_; }

  ValueType valueType() const;
  std::string key() const;

  friend bool operator==(const ParamBinding& a, const ParamBinding& b);

 private:
  ParamBinding(Kind kind, ParamValue value, Relation relation, std::optional<FilterExpr> filter)
      : kind_(kind), value_(std::move(value)), relation_(relation), filter_(std::move(filter)) {}

  Kind kind_;
  ParamValue value_;
  Relation relation_;
  std::optional<FilterExpr> filter_;
};

/// Absent when a dynamic binding has no candidate; several candidates
/// resolve to the smallest value.
std::optional<ParamValue> bindParam(const ParamBinding& p, const AbstractedGraph& g,
                                    std::size_t nodeIndex);

// ---------------------------------------------------------------------------
// Transformations

enum class TransformKind : std::uint8_t {
  kUpdateColor,
  kMove,
  kMoveMax,
  kRotate,
  kFillRectangle,
  kHollowRectangle,
  kAddBorder,
  kInsertPattern,
  kMirror,
  kExtend,
  kFlip,
};

inline constexpr std::array kAllTransforms = {
    TransformKind::kUpdateColor,   TransformKind::kMove,         TransformKind::kMoveMax,
    TransformKind::kRotate,        TransformKind::kFillRectangle, TransformKind::kHollowRectangle,
    TransformKind::kAddBorder,     TransformKind::kInsertPattern, TransformKind::kMirror,
    TransformKind::kExtend,        TransformKind::kFlip};

class UnknownTransform : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wrong number or wrong types of transformation parameters.
class ArityMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view transformName(TransformKind t);
/// Throws UnknownTransform.
TransformKind transformFromName(std::string_view name);
std::span<const ValueType> transformSignature(TransformKind t);

struct TransformStep {
  TransformKind kind;
  std::vector<ParamBinding> params;

  /// Checks arity and parameter types; throws ArityMismatch.
  static TransformStep make(TransformKind kind, std::vector<ParamBinding> params);

  std::string key() const;
  friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

struct FullOperation {
  FilterExpr filter;
  TransformStep transform;

  std::string key() const;
  friend bool operator==(const FullOperation&, const FullOperation&) = default;
};

struct Program {
  AbstractionKind abstraction = AbstractionKind::kConnected;
  std::vector<FullOperation> steps;
  friend bool operator==(const Program&, const Program&) = default;
};

/// Replaces node `id` by its transformed version (fresh id) or adds the
/// nodes the transformation creates. Throws ArityMismatch.
AbstractedGraph applyTransform(const AbstractedGraph& g, NodeId id, TransformKind t,
                               std::span<const ParamValue> values);

/// Convenience overload resolving the name first; throws UnknownTransform.
AbstractedGraph applyTransform(const AbstractedGraph& g, NodeId id, std::string_view name,
                               std::span<const ParamValue> values);

struct OperationResult {
  AbstractedGraph graph;
  // False when nothing matched, every binding was absent, or every
  // transformation left its node as it was.
  bool effective;
};

/// Applies `step` to the given pre-state node indices in ascending order.
/// Bindings are resolved against the pre-state graph.
OperationResult applyToNodes(const AbstractedGraph& g, std::span<const std::size_t> nodeIndices,
                             const TransformStep& step);

OperationResult applyOperation(const FullOperation& op, const AbstractedGraph& g);

Grid applyProgram(const Program& program, const Grid& grid);

}  // namespace gridsynth
