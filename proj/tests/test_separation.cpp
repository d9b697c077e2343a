#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "lotforge/error.hpp"
#include "lotforge/separation.hpp"

using namespace lotforge;
using lotforge::testing::open_instance;

namespace {

DriveGraph graph_of(int rows, int cols, std::vector<Cell> blocked = {}) {
  GridSpec g;
  g.mu = rows;
  g.nu = cols;
  g.blocked = std::move(blocked);
  return DriveGraph(AnchorSets(g, FieldParams{1, 2, 1}), g);
}

// does removing `removed` leave no path from s to t
bool cuts(const DriveGraph& g, int s, int t, const std::vector<int>& removed) {
  std::vector<uint8_t> mask(size_t(g.num_nodes()), 0);
  for (int v : removed) mask[size_t(v)] = 1;
  return bfs_distances(g, {s}, mask)[size_t(t)] < 0;
}

// smallest separating set of at most three nodes, or 4 when none exists
int brute_min_cut(const DriveGraph& g, int s, int t) {
  const int n = g.num_nodes();
  if (cuts(g, s, t, {})) return 0;
  for (int a = 0; a < n; ++a) {
    if (a == s || a == t) continue;
    if (cuts(g, s, t, {a})) return 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (a == s || a == t || b == s || b == t) continue;
      if (cuts(g, s, t, {a, b})) return 2;
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (a == s || a == t || b == s || b == t || c == s || c == t) continue;
        if (cuts(g, s, t, {a, b, c})) return 3;
      }
  return 4;
}

std::vector<double> point(const Formulation& F, const std::vector<Cell>& drive,
                          const std::vector<std::pair<Cell, Cell>>& arcs = {}) {
  std::vector<double> x(size_t(F.model.num_variables()), 0.0);
  for (Cell c : drive) x[size_t(F.vars.drive(c))] = 1;
  for (auto [a, b] : arcs) x[size_t(F.vars.z[size_t(F.graph.arc_between(F.graph.node(a), F.graph.node(b)))])] = 1;
  return x;
}

}  // namespace

TEST(VertexCut, ArticulationNode) {
  DriveGraph g = graph_of(1, 3);
  auto sep = min_vertex_cut(g, {g.node({0, 0})}, {g.node({0, 2})});
  EXPECT_EQ(sep.cut_nodes, (std::vector<int>{g.node({0, 1})}));
  EXPECT_TRUE(separates(g, sep));
}

TEST(VertexCut, OpenThreeByThreeCorners) {
  DriveGraph g = graph_of(3, 3);
  auto sep = min_vertex_cut(g, {g.node({0, 0})}, {g.node({2, 2})});
  EXPECT_EQ(sep.cut_nodes.size(), 2u);
  EXPECT_TRUE(separates(g, sep));
  EXPECT_EQ(sep.cut_nodes.size() + sep.near_side.size() + sep.far_side.size(), size_t(g.num_nodes()));
}

TEST(VertexCut, AdjacentSetsHaveNoSeparator) {
  DriveGraph g = graph_of(1, 2);
  try {
    min_vertex_cut(g, {0}, {1});
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSeparatorExists);
  }
}

TEST(VertexCut, MatchesBruteForceOnRandomGrids) {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    int rows = 3 + int(rng() % 3), cols = 3 + int(rng() % 3);
    std::vector<Cell> blocked;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (rng() % 100 < 20) blocked.push_back({r, c});
    DriveGraph g = graph_of(rows, cols, blocked);
    if (g.num_nodes() < 4) continue;
    int s = int(rng() % uint64_t(g.num_nodes())), t = int(rng() % uint64_t(g.num_nodes()));
    if (s == t || g.arc_between(s, t) >= 0) continue;
    int brute = brute_min_cut(g, s, t);
    auto sep = min_vertex_cut(g, {s}, {t});
    EXPECT_TRUE(separates(g, sep));
    if (brute <= 3)
      EXPECT_EQ(int(sep.cut_nodes.size()), brute);
    else
      EXPECT_GT(sep.cut_nodes.size(), 3u);
    ++checked;
  }
  EXPECT_GE(checked, 30);
}

TEST(EdgeCut, SingleLightArcBetweenBlobs) {
  DriveGraph g = graph_of(1, 4);
  std::vector<uint8_t> z(size_t(g.num_arcs()), 0);
  int a01 = g.arc_between(0, 1), a12 = g.arc_between(1, 2), a23 = g.arc_between(2, 3);
  z[size_t(a01)] = z[size_t(a23)] = 1;
  auto cut = min_weighted_edge_cut(g, z, {0}, {3});
  EXPECT_EQ(cut.cut_arcs, (std::vector<int>{a12}));
  EXPECT_TRUE(separates(g, cut));
}

TEST(EdgeCut, ActivePathCannotBeCut) {
  DriveGraph g = graph_of(1, 3);
  std::vector<uint8_t> z(size_t(g.num_arcs()), 0);
  z[size_t(g.arc_between(0, 1))] = z[size_t(g.arc_between(1, 2))] = 1;
  try {
    min_weighted_edge_cut(g, z, {0}, {2});
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::CutContainsHeavyArc);
  }
}

TEST(EdgeCut, PrefersLightArcs) {
  // two routes from (0,0) to (0,2): the top one has an active arc, the bottom one none
  DriveGraph g = graph_of(2, 3);
  std::vector<uint8_t> z(size_t(g.num_arcs()), 0);
  int s = g.node({0, 0}), t = g.node({0, 2});
  z[size_t(g.arc_between(s, g.node({0, 1})))] = 1;
  auto cut = min_weighted_edge_cut(g, z, {s}, {t});
  EXPECT_TRUE(separates(g, cut));
  for (int a : cut.cut_arcs) EXPECT_FALSE(z[size_t(a)]);
}

TEST(SeparateTwoWay, ConnectedIncumbentGivesNothing) {
  Instance I = open_instance(2, 6, Mode::TwoWay, 2, {{0, 0}});
  Formulation F = build_formulation(I, {Variant::CutBased, Mode::TwoWay});
  SeparationStats st;
  EXPECT_TRUE(separate_two_way(F, point(F, {{0, 0}, {0, 1}, {0, 2}}), {}, &st).empty());
  EXPECT_EQ(st.calls, 1);
}

TEST(SeparateTwoWay, StrandedCellIsCut) {
  Instance I = open_instance(4, 6, Mode::TwoWay, 2, {{0, 0}});
  Formulation F = build_formulation(I, {Variant::CutBased, Mode::TwoWay});
  auto x = point(F, {{0, 0}, {2, 3}});
  SeparationStats st;
  auto rows = separate_two_way(F, x, {}, &st);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].violated(x));
  EXPECT_EQ(rows[0].tag, Tag::FeasibilityCut);
  EXPECT_EQ(st.separator_failures, 0);
  EXPECT_EQ(st.nonviolated_cuts, 0);
  EXPECT_EQ(st.unsound_rows, 0);
  int ycell = F.vars.drive({2, 3});
  EXPECT_EQ(rows[0].terms.front().var, ycell);
}

TEST(SeparateTwoWay, OneRowPerStrandedCell) {
  Instance I = open_instance(4, 7, Mode::TwoWay, 2, {{0, 0}});
  Formulation F = build_formulation(I, {Variant::CutBased, Mode::TwoWay});
  auto x = point(F, {{0, 0}, {2, 4}, {2, 5}, {1, 5}});
  auto rows = separate_two_way(F, x, {}, nullptr);
  EXPECT_EQ(rows.size(), 3u);
  for (const auto& r : rows) EXPECT_TRUE(r.violated(x));
  SeparationOptions one;
  one.cut_per_cell = false;
  EXPECT_EQ(separate_two_way(F, x, one, nullptr).size(), 1u);
}

TEST(SeparateOneWay, FeasibleIncumbentGivesNothing) {
  Instance I = open_instance(2, 2, Mode::OneWay, 1, {{0, 0}}, {{0, 1}});
  Formulation F = build_formulation(I, {Variant::CutBased, Mode::OneWay});
  auto x = point(F, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {{{0, 1}, {1, 1}}, {{1, 1}, {1, 0}}, {{1, 0}, {0, 0}}});
  EXPECT_TRUE(separate_one_way(F, x, {}, nullptr).empty());
}

TEST(SeparateOneWay, StrandedTwoCycle) {
  Instance I = open_instance(3, 4, Mode::OneWay, 1, {{0, 0}}, {{0, 1}});
  Formulation F = build_formulation(I, {Variant::CutBased, Mode::OneWay});
  auto x = point(F, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}},
                 {{{0, 1}, {1, 1}}, {{1, 1}, {1, 0}}, {{1, 0}, {0, 0}}, {{2, 2}, {2, 3}}, {{2, 3}, {2, 2}}});
  SeparationStats st;
  auto rows = separate_one_way(F, x, {}, &st);
  // one row per stranded cell on each side
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.violated(x));
    int z_terms = 0;
    for (const Term& t : r.terms)
      if (F.model.variable(t.var).ref.kind == VarKind::DirZ) ++z_terms;
    EXPECT_LE(z_terms, 4);
    EXPECT_GE(z_terms, 1);
  }
  EXPECT_EQ(st.separator_failures, 0);
  EXPECT_EQ(st.unsound_rows, 0);
}
