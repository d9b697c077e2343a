#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "lotforge/error.hpp"
#include "lotforge/grid.hpp"

using namespace lotforge;

namespace {

std::set<Cell> as_set(const std::vector<Cell>& v) { return {v.begin(), v.end()}; }

GridSpec open_grid(int mu, int nu) {
  GridSpec g;
  g.mu = mu;
  g.nu = nu;
  return g;
}

}  // namespace

TEST(Anchors, AccessSetsOfTheWideFieldExample) {
  // the right and lower neighbours reach column/row 12, so the grid needs 13 cells a side
  AnchorSets A(open_grid(13, 13), FieldParams{2, 3, 4});
  EXPECT_EQ(as_set(A.n0({6, 6})), (std::set<Cell>{{4, 2}, {5, 2}, {6, 2}, {4, 9}, {5, 9}, {6, 9}}));
  EXPECT_EQ(as_set(A.n90({6, 6})), (std::set<Cell>{{2, 4}, {2, 5}, {2, 6}, {9, 4}, {9, 5}, {9, 6}}));
  AnchorSets small(open_grid(12, 12), FieldParams{2, 3, 4});
  EXPECT_EQ(as_set(small.n0({6, 6})), (std::set<Cell>{{4, 2}, {5, 2}, {6, 2}}));
}

TEST(Anchors, SingleCellHoldsOnlyADriveField) {
  AnchorSets A(open_grid(1, 1), FieldParams{1, 2, 1});
  EXPECT_TRUE(A.p0().empty());
  EXPECT_TRUE(A.p90().empty());
  EXPECT_EQ(A.d(), (std::vector<Cell>{{0, 0}}));
}

TEST(Anchors, FootprintsAvoidBlockedCellsAndEdges) {
  GridSpec g = open_grid(4, 5);
  g.blocked = {{1, 2}};
  FieldParams p{1, 2, 2};
  AnchorSets A(g, p);
  for (FieldKind k : {FieldKind::Park0, FieldKind::Park90, FieldKind::Drive})
    for (Cell a : A.anchors(k))
      for (Cell c : A.footprint(k, a)) {
        EXPECT_TRUE(g.in_range(c));
        EXPECT_NE(c, (Cell{1, 2}));
      }
  // 0-degree fields are one row tall and two wide
  EXPECT_EQ(A.footprint(FieldKind::Park0, {0, 0}), (std::vector<Cell>{{0, 0}, {0, 1}}));
  EXPECT_FALSE(A.valid(FieldKind::Park0, {1, 1}));
  EXPECT_TRUE(A.valid(FieldKind::Park90, {2, 2}));
}

TEST(Anchors, InverseMapsMatchFootprints) {
  GridSpec g = open_grid(5, 6);
  g.blocked = {{2, 3}, {4, 0}};
  AnchorSets A(g, FieldParams{1, 2, 2});
  for (FieldKind k : {FieldKind::Park0, FieldKind::Park90, FieldKind::Drive})
    for (int r = 0; r < g.mu; ++r)
      for (int c = 0; c < g.nu; ++c) {
        std::set<Cell> expect;
        for (Cell a : A.anchors(k)) {
          auto fp = A.footprint(k, a);
          if (std::find(fp.begin(), fp.end(), Cell{r, c}) != fp.end()) expect.insert(a);
        }
        EXPECT_EQ(as_set(A.covering(k, {r, c})), expect);
      }
}

TEST(Anchors, EntranceMustBeADriveAnchor) {
  // the entrance cell is free but its 2x2 field covers a blocked cell
  GridSpec g = open_grid(3, 3);
  g.blocked = {{1, 1}};
  g.entrances = {{0, 0}};
  try {
    compute_anchor_sets(g, FieldParams{1, 2, 2});
    FAIL() << "expected EntranceInvalid";
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EntranceInvalid);
  }
}

TEST(Anchors, EntranceEqualExitRejected) {
  GridSpec g = open_grid(2, 2);
  g.mode = Mode::OneWay;
  g.entrances = {{0, 0}};
  g.exits = {{0, 0}};
  try {
    validate_instance(g, FieldParams{1, 2, 1});
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EntranceEqualsExit);
  }
}

TEST(DriveGraphTest, AdjacentPairTwoWay) {
  GridSpec g = open_grid(1, 2);
  g.entrances = {{0, 0}};
  AnchorSets A(g, FieldParams{1, 2, 1});
  DriveGraph G(A, g);
  ASSERT_EQ(G.num_arcs(), 2);
  std::set<std::pair<Cell, Cell>> arcs;
  for (int a = 0; a < G.num_arcs(); ++a) arcs.insert({G.tail_cell(a), G.head_cell(a)});
  EXPECT_EQ(arcs, (std::set<std::pair<Cell, Cell>>{{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}}));
}

TEST(DriveGraphTest, OneWayDropsTheEntranceExitLink) {
  GridSpec g = open_grid(1, 7);
  for (int c = 0; c < 5; ++c) g.blocked.push_back({0, c});
  g.mode = Mode::OneWay;
  g.entrances = {{0, 5}};
  g.exits = {{0, 6}};
  DriveGraph G(AnchorSets(g, FieldParams{1, 2, 1}), g);
  EXPECT_EQ(G.num_nodes(), 2);
  EXPECT_EQ(G.num_arcs(), 0);
}

TEST(DriveGraphTest, FullThreeByThree) {
  GridSpec g = open_grid(3, 3);
  DriveGraph G(AnchorSets(g, FieldParams{1, 2, 1}), g);
  EXPECT_EQ(G.num_nodes(), 9);
  EXPECT_EQ(G.num_arcs(), 24);
  for (int a = 0; a < G.num_arcs(); ++a) EXPECT_EQ(G.reverse(G.reverse(a)), a);
}

TEST(DriveGraphTest, DriveAnchorsOverlapWithDeltaTwo) {
  // overlapping 2x2 fields one cell apart are neighbours
  GridSpec g = open_grid(2, 4);
  DriveGraph G(AnchorSets(g, FieldParams{1, 2, 2}), g);
  EXPECT_EQ(G.num_nodes(), 3);
  EXPECT_EQ(G.num_arcs(), 4);
}

TEST(HopRings, PathGraph) {
  GridSpec g = open_grid(1, 3);
  DriveGraph G(AnchorSets(g, FieldParams{1, 2, 1}), g);
  auto rings = hop_rings(G, {0, 0});
  ASSERT_EQ(rings.size(), 3u);
  EXPECT_EQ(rings[0], (std::vector<Cell>{{0, 0}}));
  EXPECT_EQ(rings[1], (std::vector<Cell>{{0, 1}}));
  EXPECT_EQ(rings[2], (std::vector<Cell>{{0, 2}}));
}

TEST(HopRings, IsolatedSource) {
  GridSpec g = open_grid(1, 3);
  g.blocked = {{0, 1}};
  DriveGraph G(AnchorSets(g, FieldParams{1, 2, 1}), g);
  auto rings = hop_rings(G, {0, 0});
  ASSERT_EQ(rings.size(), 1u);
  EXPECT_EQ(rings[0], (std::vector<Cell>{{0, 0}}));
}

TEST(HopRings, FirstRingIsTheOrthogonalNeighbours) {
  GridSpec g = open_grid(12, 12);
  g.blocked = {{5, 5}};
  FieldParams p{1, 2, 2};
  AnchorSets A(g, p);
  DriveGraph G(A, g);
  auto rings = hop_rings(G, {5, 2});
  std::set<Cell> expect;
  for (int k = 0; k < 4; ++k) {
    Cell c{5 + kDirRow[size_t(k)], 2 + kDirCol[size_t(k)]};
    if (A.valid(FieldKind::Drive, c)) expect.insert(c);
  }
  EXPECT_EQ(as_set(rings[1]), expect);
  // (5,4) covers the blocked cell (5,5)
  EXPECT_FALSE(expect.count({5, 4}));
}

TEST(HopRings, RingsPartitionTheReachableNodes) {
  GridSpec g = open_grid(6, 7);
  g.blocked = {{2, 2}, {3, 4}, {0, 5}};
  DriveGraph G(AnchorSets(g, FieldParams{1, 2, 1}), g);
  auto rings = hop_rings(G, {0, 0});
  auto dist = bfs_distances(G, {G.node({0, 0})});
  size_t total = 0;
  for (size_t d = 0; d < rings.size(); ++d) {
    total += rings[d].size();
    for (Cell c : rings[d]) EXPECT_EQ(dist[size_t(G.node(c))], int(d));
  }
  size_t reachable = size_t(std::count_if(dist.begin(), dist.end(), [](int d) { return d >= 0; }));
  EXPECT_EQ(total, reachable);
}

TEST(HopRings, SourceOutsideTheGraphThrows) {
  GridSpec g = open_grid(2, 2);
  g.blocked = {{0, 0}};
  DriveGraph G(AnchorSets(g, FieldParams{1, 2, 1}), g);
  EXPECT_THROW(hop_rings(G, {0, 0}), LotError);
}

TEST(Components, CountsIslands) {
  GridSpec g = open_grid(1, 5);
  g.blocked = {{0, 2}};
  DriveGraph G(AnchorSets(g, FieldParams{1, 2, 1}), g);
  std::vector<uint8_t> all(size_t(G.num_nodes()), 1);
  int count = 0;
  auto comp = components(G, all, &count);
  EXPECT_EQ(count, 2);
  EXPECT_EQ(comp[size_t(G.node({0, 0}))], comp[size_t(G.node({0, 1}))]);
  EXPECT_NE(comp[size_t(G.node({0, 1}))], comp[size_t(G.node({0, 3}))]);
}

TEST(Canonicalize, SortsAndDedups) {
  GridSpec g = open_grid(3, 3);
  g.blocked = {{2, 2}, {0, 1}, {2, 2}};
  canonicalize(g);
  EXPECT_EQ(g.blocked, (std::vector<Cell>{{0, 1}, {2, 2}}));
}
