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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "gridsynth/dsl.hpp"

using namespace gridsynth;

namespace {

constexpr Color kBlack{0}, kBlue{1}, kRed{2}, kGreen{3}, kGrey{5};

Grid rows(std::vector<std::vector<int>> r) { return Grid::fromRows(r); }

ObjectNode node(NodeId id, Color color, std::vector<Pixel> pixels) {
  ObjectNode n;
  n.id = id;
  n.color = color;
  n.pixels = std::move(pixels);
  normalizePixels(n.pixels);
  return n;
}

AbstractedGraph graphOf(int h, int w, std::vector<ObjectNode> nodes) {
  return AbstractedGraph(AbstractionKind::kConnected, h, w, kBlack, std::move(nodes));
}

const ObjectNode& only(const AbstractedGraph& g) {
  REQUIRE(g.nodes().size() == 1);
  return g.nodes()[0];
}

std::vector<Pixel> transformed(const ObjectNode& n, int h, int w, TransformKind t,
                               std::vector<ParamValue> v) {
  auto g = graphOf(h, w, {n});
  return only(applyTransform(g, n.id, t, v)).pixels;
}

TransformStep step(TransformKind t, std::vector<ParamBinding> p) {
  return TransformStep::make(t, std::move(p));
}

}  // namespace

TEST_CASE("leaf filters") {
  auto g = graphOf(3, 6, {node(0, kGrey, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}),
                          node(1, kRed, {{2, 5}})});
  CHECK(evalFilter(FilterExpr::bySize(Size{6}), g, 0));
  CHECK_FALSE(evalFilter(FilterExpr::bySize(Size{6}), g, 1));
  CHECK(evalFilter(FilterExpr::byColor(kRed), g, 1));
  CHECK(evalFilter(FilterExpr::all(), g, 1));
  // No shared row or column, so no neighbors.
  CHECK_FALSE(evalFilter(FilterExpr::byNeighborColor(kRed), g, 0));
  CHECK(evalFilter(FilterExpr::forAllNeighbors(FilterExpr::byColor(kBlue)), g, 0));
}

TEST_CASE("neighbor quantifiers") {
  // Node 0 sits in row 0 with a blue node to its right and a red node below.
  auto g = graphOf(5, 5, {node(0, kGrey, {{0, 0}}), node(1, kBlue, {{0, 4}}), node(2, kRed, {{4, 0}})});
  auto blue = FilterExpr::byColor(kBlue);
  CHECK_FALSE(evalFilter(FilterExpr::forAllNeighbors(blue), g, 0));
  CHECK(evalFilter(FilterExpr::existsNeighbor(blue), g, 0));
  CHECK(evalFilter(FilterExpr::byNeighborColor(kRed), g, 0));
  CHECK(evalFilter(FilterExpr::byNeighborSize(Size{1}), g, 0));
  CHECK_FALSE(evalFilter(FilterExpr::byNeighborColor(kRed), g, 1));
}

TEST_CASE("filter keys and equality") {
  auto f = FilterExpr::negate(FilterExpr::bySize(Size{6}));
  CHECK(f.key() == FilterExpr::negate(FilterExpr::bySize(Size{6})).key());
  CHECK(f == FilterExpr::negate(FilterExpr::bySize(Size{6})));
  CHECK_FALSE(f == FilterExpr::bySize(Size{6}));
  CHECK(f.depth() == 2);
  CHECK(FilterExpr::all().depth() == 1);
  CHECK(FilterExpr::both(FilterExpr::byColor(kRed), FilterExpr::bySize(Size{1})).key() !=
        FilterExpr::both(FilterExpr::bySize(Size{1}), FilterExpr::byColor(kRed)).key());
}

TEST_CASE("property: filter algebra on random graphs") {
  std::mt19937 rng(5);
  auto randomLeaf = [&] {
    switch (rng() % 5) {
      case 0:
        return FilterExpr::byColor(Color{static_cast<int>(rng() % 3)});
      case 1:
        return FilterExpr::bySize(Size{1 + static_cast<int>(rng() % 3)});
      case 2:
        return FilterExpr::byNeighborColor(Color{static_cast<int>(rng() % 3)});
      case 3:
        return FilterExpr::byNeighborSize(Size{1 + static_cast<int>(rng() % 3)});
      default:
        return FilterExpr::all();
    }
  };
  for (int trial = 0; trial < 100; ++trial) {
    Grid grid(5, 5);
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c) grid.set({r, c}, Color{static_cast<int>(rng() % 3)});
    auto g = abstractConnected(grid);
    auto a = randomLeaf(), b = randomLeaf(), c = randomLeaf();
    for (std::size_t n = 0; n < g.nodes().size(); ++n) {
      auto ev = [&](const FilterExpr& f) { return evalFilter(f, g, n); };
      using F = FilterExpr;
      CHECK(ev(F::negate(F::negate(a))) == ev(a));
      CHECK(ev(F::negate(a)) == !ev(a));
      CHECK(ev(F::both(a, b)) == ev(F::both(b, a)));
      CHECK(ev(F::both(F::both(a, b), c)) == ev(F::both(a, F::both(b, c))));
      CHECK(ev(F::either(a, b)) == ev(F::either(b, a)));
      CHECK(ev(F::negate(F::both(a, b))) == ev(F::either(F::negate(a), F::negate(b))));
      CHECK(ev(F::negate(F::either(a, b))) == ev(F::both(F::negate(a), F::negate(b))));
      CHECK(ev(F::forAllNeighbors(a)) == !ev(F::existsNeighbor(F::negate(a))));
    }
  }
}

TEST_CASE("parameter bindings") {
  // Grey node with a red size-1 neighbor in its row and a larger blue one in its column.
  auto g = graphOf(6, 6, {node(0, kGrey, {{0, 0}, {1, 0}}), node(1, kRed, {{0, 5}}),
                          node(2, kBlue, {{5, 0}, {5, 1}})});
  CHECK(bindParam(ParamBinding::constant(kBlue), g, 0) == ParamValue{kBlue});
  CHECK(bindParam(ParamBinding::neighbor(FilterExpr::bySize(Size{1}), Relation::kColor), g, 0) ==
        ParamValue{kRed});
  CHECK(bindParam(ParamBinding::own(Relation::kSize), g, 0) == ParamValue{Size{2}});
  CHECK(bindParam(ParamBinding::neighbor(FilterExpr::all(), Relation::kColor), g, 0) ==
        ParamValue{kBlue});
  CHECK(bindParam(ParamBinding::neighbor(FilterExpr::bySize(Size{1}), Relation::kDirection), g,
                  0) == ParamValue{Direction::kRight});
  CHECK(bindParam(ParamBinding::neighbor(FilterExpr::byColor(kBlue), Relation::kDirection), g,
                  0) == ParamValue{Direction::kDown});
  CHECK(bindParam(ParamBinding::own(Relation::kPosition), g, 2) == ParamValue{Pixel{5, 0}});
  CHECK_FALSE(bindParam(ParamBinding::own(Relation::kDirection), g, 0).has_value());

  auto lone = graphOf(3, 3, {node(0, kGrey, {{0, 0}})});
  CHECK_FALSE(
      bindParam(ParamBinding::neighbor(FilterExpr::bySize(Size{1}), Relation::kColor), lone, 0)
          .has_value());
}

TEST_CASE("transform signatures are checked") {
  CHECK_THROWS_AS(TransformStep::make(TransformKind::kUpdateColor, {}), ArityMismatch);
  CHECK_THROWS_AS(
      TransformStep::make(TransformKind::kMove, {ParamBinding::constant(kRed)}), ArityMismatch);
  CHECK_THROWS_AS(transformFromName("teleport"), UnknownTransform);
  auto g = graphOf(2, 2, {node(0, kGrey, {{0, 0}})});
  std::vector<ParamValue> none;
  CHECK_THROWS_AS(applyTransform(g, 0, TransformKind::kMove, none), ArityMismatch);
  CHECK_THROWS_AS(applyTransform(g, 0, "teleport", none), UnknownTransform);
  for (auto t : kAllTransforms) CHECK(transformFromName(transformName(t)) == t);
}

TEST_CASE("updateColor and move") {
  auto g = graphOf(4, 4, {node(0, kGrey, {{1, 1}, {1, 2}})});
  auto red = applyTransform(g, 0, TransformKind::kUpdateColor, std::vector<ParamValue>{kRed});
  CHECK(only(red).color == kRed);
  CHECK(only(red).pixels == only(g).pixels);
  CHECK(only(red).id == g.nextId());

  auto up = std::vector<ParamValue>{Direction::kUp};
  auto down = std::vector<ParamValue>{Direction::kDown};
  auto moved = applyTransform(g, 0, TransformKind::kMove, up);
  moved = applyTransform(moved, only(moved).id, TransformKind::kMove, up);
  CHECK(only(moved).pixels == std::vector<Pixel>{{-1, 1}, {-1, 2}});
  moved = applyTransform(moved, only(moved).id, TransformKind::kMove, down);
  moved = applyTransform(moved, only(moved).id, TransformKind::kMove, down);
  CHECK(only(moved).pixels == only(g).pixels);

  // Same color: node kept as is.
  auto same = applyTransform(g, 0, TransformKind::kUpdateColor, std::vector<ParamValue>{kGrey});
  CHECK(same.shares(g));
}

TEST_CASE("moveMax stops at the edge or another node") {
  auto lone = node(0, kGrey, {{3, 0}, {4, 0}});
  CHECK(transformed(lone, 6, 1, TransformKind::kMoveMax, {Direction::kUp}) ==
        std::vector<Pixel>{{0, 0}, {1, 0}});

  auto g = graphOf(6, 2, {node(0, kBlue, {{0, 0}, {0, 1}}), node(1, kRed, {{4, 0}})});
  auto out = applyTransform(g, 1, TransformKind::kMoveMax, std::vector<ParamValue>{Direction::kUp});
  CHECK(out.nodes()[1].pixels == std::vector<Pixel>{{1, 0}});
  auto blocked = applyTransform(out, out.nodes()[1].id, TransformKind::kMoveMax,
                                std::vector<ParamValue>{Direction::kUp});
  CHECK(blocked.shares(out));
}

TEST_CASE("rotate turns clockwise about the floored center") {
  // Horizontal bar of three cells becomes vertical through its center.
  auto bar = node(0, kGrey, {{2, 1}, {2, 2}, {2, 3}});
  CHECK(transformed(bar, 5, 5, TransformKind::kRotate, {}) ==
        std::vector<Pixel>{{1, 2}, {2, 2}, {3, 2}});
  // L shape: (0,0),(1,0),(1,1); center (0,0) floored.
  auto ell = node(0, kGrey, {{0, 0}, {1, 0}, {1, 1}});
  CHECK(transformed(ell, 4, 4, TransformKind::kRotate, {}) ==
        std::vector<Pixel>{{0, -1}, {0, 0}, {1, -1}});
  // With an odd-sized bounding box the pivot is exact, so four turns restore the shape.
  auto g = graphOf(5, 5, {node(0, kGrey, {{1, 1}, {1, 2}, {2, 1}, {3, 1}, {3, 3}})});
  auto r = g;
  for (int i = 0; i < 4; ++i) r = applyTransform(r, only(r).id, TransformKind::kRotate, {});
  CHECK(only(r).pixels == only(g).pixels);
}

TEST_CASE("flip and mirror") {
  auto ell = node(0, kGrey, {{0, 0}, {1, 0}, {1, 1}});
  CHECK(transformed(ell, 3, 3, TransformKind::kFlip, {Direction::kLeft}) ==
        std::vector<Pixel>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(transformed(ell, 3, 3, TransformKind::kFlip, {Direction::kUp}) ==
        std::vector<Pixel>{{0, 0}, {0, 1}, {1, 0}});

  auto dot = node(0, kGrey, {{1, 1}});
  // Axis through (1,3) perpendicular to "right" is column 3.
  CHECK(transformed(dot, 5, 6, TransformKind::kMirror, {Pixel{1, 3}, Direction::kRight}) ==
        std::vector<Pixel>{{1, 5}});
  CHECK(transformed(dot, 5, 6, TransformKind::kMirror, {Pixel{3, 0}, Direction::kDown}) ==
        std::vector<Pixel>{{5, 1}});
  // Diagonal axis through the origin swaps coordinates and negates them.
  auto off = node(0, kGrey, {{0, 2}});
  CHECK(transformed(off, 5, 6, TransformKind::kMirror, {Pixel{0, 0}, Direction::kDownRight}) ==
        std::vector<Pixel>{{-2, 0}});
}

TEST_CASE("extend grows until contact") {
  auto g = graphOf(1, 6, {node(0, kRed, {{0, 0}}), node(1, kGreen, {{0, 4}})});
  auto out = applyTransform(g, 0, TransformKind::kExtend, std::vector<ParamValue>{Direction::kRight});
  REQUIRE(out.nodes().size() == 2);
  CHECK(out.nodes()[1].pixels == std::vector<Pixel>{{0, 0}, {0, 1}, {0, 2}, {0, 3}});
  CHECK(reconstruct(out) == rows({{2, 2, 2, 2, 3, 0}}));
  auto edge = applyTransform(g, 1, TransformKind::kExtend, std::vector<ParamValue>{Direction::kRight});
  CHECK(reconstruct(edge) == rows({{2, 0, 0, 0, 3, 3}}));
}

TEST_CASE("rectangle and border transforms") {
  // 3x3 ring of blue.
  auto ring = node(0, kBlue, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
  auto g = graphOf(3, 4, {ring});
  auto filled = applyTransform(g, 0, TransformKind::kFillRectangle, std::vector<ParamValue>{kRed});
  CHECK(reconstruct(filled) == rows({{1, 1, 1, 0}, {1, 2, 1, 0}, {1, 1, 1, 0}}));
  CHECK(filled.nodes().size() == 2);

  auto block = node(0, kBlue, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
  auto h = applyTransform(graphOf(3, 3, {block}), 0, TransformKind::kHollowRectangle,
                          std::vector<ParamValue>{kGreen});
  REQUIRE(h.nodes().size() == 2);
  CHECK(h.nodes()[0].size().value == 8);
  CHECK(h.nodes()[1].pixels == std::vector<Pixel>{{1, 1}});
  CHECK(reconstruct(h) == rows({{1, 1, 1}, {1, 3, 1}, {1, 1, 1}}));

  auto dot = graphOf(3, 4, {node(0, kRed, {{1, 1}}), node(1, kBlue, {{1, 3}})});
  auto bordered = applyTransform(dot, 0, TransformKind::kAddBorder, std::vector<ParamValue>{kGreen});
  CHECK(reconstruct(bordered) == rows({{3, 3, 3, 0}, {3, 2, 3, 1}, {3, 3, 3, 0}}));
}

TEST_CASE("insertPattern anchors at the bounding-box corner") {
  PatternDef pattern{{{{0, 0}, kRed}, {{0, 1}, kGreen}, {{1, 1}, kRed}}};
  auto g = graphOf(4, 4, {node(0, kBlue, {{1, 1}, {2, 1}})});
  auto out = applyTransform(g, 0, TransformKind::kInsertPattern, std::vector<ParamValue>{pattern});
  CHECK(out.nodes().size() == 3);
  CHECK(reconstruct(out) == rows({{0, 0, 0, 0}, {0, 2, 3, 0}, {0, 1, 2, 0}, {0, 0, 0, 0}}));
}

TEST_CASE("applyOperation recolors every match") {
  auto grid = rows({{5, 5, 0, 5}, {0, 0, 0, 5}, {5, 0, 0, 0}});
  auto g = abstractConnected(grid);
  FullOperation op{FilterExpr::byColor(kGrey), step(TransformKind::kUpdateColor,
                                                    {ParamBinding::constant(kBlue)})};
  auto r = applyOperation(op, g);
  CHECK(r.effective);
  CHECK(reconstruct(r.graph) == rows({{1, 1, 0, 1}, {0, 0, 0, 1}, {1, 0, 0, 0}}));

  FullOperation none{FilterExpr::byColor(kRed), op.transform};
  auto n = applyOperation(none, g);
  CHECK_FALSE(n.effective);
  CHECK(reconstruct(n.graph) == grid);
}

TEST_CASE("dynamic recolor takes the size-1 neighbor's color") {
  auto grid = rows({{5, 5, 0, 2}, {0, 0, 0, 0}, {0, 5, 0, 0}, {0, 5, 0, 3}});
  auto g = abstractConnected(grid);
  FullOperation op{FilterExpr::byColor(kGrey),
                   step(TransformKind::kUpdateColor,
                        {ParamBinding::neighbor(FilterExpr::bySize(Size{1}), Relation::kColor)})};
  auto r = applyOperation(op, g);
  CHECK(reconstruct(r.graph) == rows({{2, 2, 0, 2}, {0, 0, 0, 0}, {0, 3, 0, 0}, {0, 3, 0, 3}}));
}

TEST_CASE("operations match on the pre-state") {
  // Recoloring 1 -> 2 must not cascade into the node that started as 2.
  auto g = abstractConnected(rows({{1, 0, 2}}));
  FullOperation op{FilterExpr::either(FilterExpr::byColor(kBlue), FilterExpr::byColor(kRed)),
                   step(TransformKind::kUpdateColor,
                        {ParamBinding::neighbor(FilterExpr::all(), Relation::kColor)})};
  auto r = applyOperation(op, g);
  CHECK(reconstruct(r.graph) == rows({{2, 0, 1}}));
}

TEST_CASE("programs") {
  auto grid = rows({{5, 5, 5, 0, 5}, {5, 5, 5, 0, 0}, {0, 0, 0, 0, 5}});
  Program empty{AbstractionKind::kConnected, {}};
  CHECK(applyProgram(empty, grid) == grid);

  Program recolor{AbstractionKind::kConnected,
              {{FilterExpr::all(), step(TransformKind::kUpdateColor, {ParamBinding::constant(kBlue)})},
               {FilterExpr::bySize(Size{6}),
                step(TransformKind::kUpdateColor, {ParamBinding::constant(kRed)})}}};
  auto expected = rows({{2, 2, 2, 0, 1}, {2, 2, 2, 0, 0}, {0, 0, 0, 0, 1}});
  CHECK(applyProgram(recolor, grid) == expected);
  CHECK(applyProgram(recolor, grid) == applyProgram(recolor, grid));
}

TEST_CASE("property: sizes stay coherent and unmatched nodes are untouched") {
  std::mt19937 rng(17);
  std::vector<TransformStep> steps;
  for (auto t : kAllTransforms) {
    std::vector<ParamBinding> params;
    for (auto type : transformSignature(t)) {
      switch (type) {
        case ValueType::kColor:
          params.push_back(ParamBinding::constant(kGreen));
          break;
        case ValueType::kDirection:
          params.push_back(ParamBinding::constant(Direction::kLeft));
          break;
        case ValueType::kPixel:
          params.push_back(ParamBinding::own(Relation::kPosition));
          break;
        case ValueType::kPattern:
          params.push_back(ParamBinding::constant(PatternDef{{{{0, 0}, kRed}}}));
          break;
        case ValueType::kSize:
          break;
      }
    }
    steps.push_back(TransformStep::make(t, std::move(params)));
  }
  for (int trial = 0; trial < 50; ++trial) {
    Grid grid(6, 6);
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) grid.set({r, c}, Color{static_cast<int>(rng() % 3)});
    auto g = abstractConnected(grid);
    auto filter = FilterExpr::byColor(Color{1 + static_cast<int>(rng() % 2)});
    for (const auto& s : steps) {
      auto r = applyOperation({filter, s}, g);
      for (const auto& n : r.graph.nodes()) {
        CHECK(n.size().value == static_cast<int>(n.pixels.size()));
        CHECK(std::is_sorted(n.pixels.begin(), n.pixels.end()));
      }
      // Frame axiom: every unmatched pre-state node survives unchanged.
      for (std::size_t i = 0; i < g.nodes().size(); ++i) {
        if (evalFilter(filter, g, i)) continue;
        const auto& before = g.nodes()[i];
        auto at = r.graph.indexOf(before.id);
        REQUIRE(at.has_value());
        CHECK(r.graph.nodes()[*at].pixels == before.pixels);
        CHECK(r.graph.nodes()[*at].color == before.color);
      }
    }
  }
}
