#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "lotforge/error.hpp"
#include "lotforge/formulations.hpp"

using namespace lotforge;
using lotforge::testing::open_instance;

namespace {

bool all_rows_hold(const ModelIR& m, const std::vector<double>& x) {
  for (const auto& c : m.constraints())
    if (c.violated(x)) return false;
  return true;
}

std::vector<double> zeros(const Formulation& F) { return std::vector<double>(size_t(F.model.num_variables()), 0.0); }

int count_tag(const ModelIR& m, Tag t) {
  return int(std::count_if(m.constraints().begin(), m.constraints().end(), [&](const auto& c) { return c.tag == t; }));
}

}  // namespace

TEST(SinglePurpose, OneRowPerCoveringDriveAnchor) {
  // 1x2 strip: one 0-degree field covering both cells, a drive field on each
  Instance I = open_instance(1, 2, Mode::OneWay, 1, {{0, 0}}, {{0, 1}});
  Formulation F = build_formulation(I, {Variant::FlowBased, Mode::OneWay});
  EXPECT_EQ(count_tag(F.model, Tag::SinglePurpose), 2);
  for (const auto& c : F.model.constraints()) {
    if (c.tag != Tag::SinglePurpose) continue;
    EXPECT_EQ(c.terms.size(), 2u);
    EXPECT_EQ(c.rhs, 1);
  }
}

TEST(SinglePurpose, BlockedCellsGetNoRow) {
  AnchorSets A(GridSpec{1, 1, {{0, 0}}, {}, {}, {}, Mode::TwoWay}, FieldParams{1, 2, 1});
  VarIndex V;
  V.nu = 1;
  V.x0 = V.x90 = V.y = {-1};
  EXPECT_TRUE(emit_single_purpose(A, V).empty());
}

TEST(Accessibility, NoNeighboursMeansFixedZero) {
  // a 1x2 field with the only drive anchors inside its own footprint has no access
  Instance I = open_instance(1, 2, Mode::OneWay, 1, {{0, 0}}, {{0, 1}});
  Formulation F = build_formulation(I, {Variant::FlowBased, Mode::OneWay});
  int x = F.vars.park(FieldKind::Park0, {0, 0});
  ASSERT_GE(x, 0);
  ASSERT_TRUE(F.model.fixings().count(x));
  EXPECT_EQ(F.model.fixings().at(x), 0);
}

TEST(Accessibility, WideFieldRowListsItsSixNeighbours) {
  Instance I;
  I.grid.mu = I.grid.nu = 13;
  I.grid.entrances = {{0, 5}};
  I.params = FieldParams{2, 3, 4};
  AnchorSets A = compute_anchor_sets(I.grid, I.params);
  Formulation F = build_formulation(I, {Variant::CutBased, Mode::TwoWay});
  int x = F.vars.park(FieldKind::Park0, {6, 6});
  bool found = false;
  for (const auto& c : F.model.constraints()) {
    if (c.tag != Tag::Accessibility || c.terms.front().var != x) continue;
    found = true;
    EXPECT_EQ(c.terms.size(), 7u);
    std::vector<int> rhs;
    for (size_t k = 1; k < c.terms.size(); ++k) rhs.push_back(c.terms[k].var);
    std::vector<int> expect;
    for (Cell d : A.n0({6, 6})) expect.push_back(F.vars.drive(d));
    std::sort(rhs.begin(), rhs.end());
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(rhs, expect);
  }
  EXPECT_TRUE(found);
}

TEST(Accessibility, StripWithOneDriveNeighbour) {
  // cells (0,0),(0,1) park; (0,2) is the only drive anchor touching the short edge
  Instance I = open_instance(2, 3, Mode::OneWay, 1, {{0, 2}}, {{1, 2}}, {{1, 0}, {1, 1}});
  Formulation F = build_formulation(I, {Variant::FlowBased, Mode::OneWay});
  int x = F.vars.park(FieldKind::Park0, {0, 0});
  int rows = 0;
  for (const auto& c : F.model.constraints()) {
    if (c.tag != Tag::Accessibility || c.terms.front().var != x) continue;
    ++rows;
    ASSERT_EQ(c.terms.size(), 2u);
    EXPECT_EQ(c.terms[1].var, F.vars.drive({0, 2}));
    EXPECT_EQ(c.terms[1].coef, -1);
  }
  EXPECT_EQ(rows, 1);
}

TEST(TwoWayFlow, EntranceAloneNeedsNoFlow) {
  Instance I = open_instance(3, 4, Mode::TwoWay, 2, {{0, 0}});
  Formulation F = build_formulation(I, {Variant::FlowBased, Mode::TwoWay});
  std::vector<double> v = zeros(F);
  v[size_t(F.vars.drive({0, 0}))] = 1;
  EXPECT_TRUE(all_rows_hold(F.model, v));
}

TEST(TwoWayFlow, AdjacentPairSendsOneUnit) {
  Instance I = open_instance(2, 3, Mode::TwoWay, 2, {{0, 0}});
  Formulation F = build_formulation(I, {Variant::FlowBased, Mode::TwoWay});
  std::vector<double> v = zeros(F);
  v[size_t(F.vars.drive({0, 0}))] = 1;
  v[size_t(F.vars.drive({0, 1}))] = 1;
  EXPECT_FALSE(all_rows_hold(F.model, v));
  int into = F.graph.arc_between(F.graph.node({0, 1}), F.graph.node({0, 0}));
  v[size_t(F.vars.f[size_t(into)])] = 1;
  EXPECT_TRUE(all_rows_hold(F.model, v));
}

TEST(CutBased, HasNoFlowVariables) {
  Instance I = open_instance(4, 4, Mode::TwoWay, 2, {{0, 0}});
  Formulation F = build_formulation(I, {Variant::CutBased, Mode::TwoWay});
  EXPECT_TRUE(F.vars.f.empty());
  for (const auto& v : F.model.variables()) EXPECT_NE(v.ref.kind, VarKind::FlowF);
  EXPECT_EQ(count_tag(F.model, Tag::Flow), 0);
  EXPECT_GT(count_tag(F.model, Tag::HopForward) + count_tag(F.model, Tag::HopReverse), 0);
}

TEST(CutBased, IslandWithoutEntranceIsCutOff) {
  // (0,1) would cover the blocked cell, leaving two separate anchors
  Instance I = open_instance(2, 5, Mode::TwoWay, 2, {{0, 0}}, {}, {{0, 2}});
  Formulation F = build_formulation(I, {Variant::CutBased, Mode::TwoWay});
  std::vector<double> v = zeros(F);
  v[size_t(F.vars.drive({0, 0}))] = 1;
  v[size_t(F.vars.drive({0, 3}))] = 1;
  EXPECT_FALSE(all_rows_hold(F.model, v));
}

TEST(OneWayFlow, BalanceIdentity) {
  Instance I = open_instance(2, 2, Mode::OneWay, 1, {{0, 0}}, {{0, 1}});
  Formulation F = build_formulation(I, {Variant::FlowBased, Mode::OneWay});
  std::vector<double> v = zeros(F);
  EXPECT_TRUE(balance_identity_holds(F, v));
  auto r = make_backend()->solve(F.model, {}, {});
  ASSERT_EQ(r.status, BackendStatus::Optimal);
  EXPECT_TRUE(balance_identity_holds(F, r.x));
  // perturb one flow on an arc between the two non-terminal cells
  int a = F.graph.arc_between(F.graph.node({1, 0}), F.graph.node({1, 1}));
  r.x[size_t(F.vars.f[size_t(a)])] += 1;
  EXPECT_FALSE(balance_identity_holds(F, r.x));
}

TEST(OneWayFlow, EntranceAndExitNeedAConnectingLoop) {
  // the direct link is not an arc, so the pair alone cannot reach each other
  Instance I = open_instance(2, 2, Mode::OneWay, 1, {{0, 0}}, {{0, 1}});
  for (Variant var : {Variant::FlowBased, Variant::FlowWithVIs, Variant::CutBased}) {
    Formulation F = build_formulation(I, {var, Mode::OneWay});
    std::vector<double> v = zeros(F);
    v[size_t(F.vars.drive({0, 0}))] = 1;
    v[size_t(F.vars.drive({0, 1}))] = 1;
    EXPECT_FALSE(all_rows_hold(F.model, v)) << to_string(var);
    for (Cell c : {Cell{1, 0}, Cell{1, 1}}) v[size_t(F.vars.drive(c))] = 1;
    auto arc = [&](Cell a, Cell b) { return F.graph.arc_between(F.graph.node(a), F.graph.node(b)); };
    // exit (0,1) -> (1,1) -> (1,0) -> entrance (0,0)
    std::vector<int> loop = {arc({0, 1}, {1, 1}), arc({1, 1}, {1, 0}), arc({1, 0}, {0, 0})};
    for (int a : loop) v[size_t(F.vars.z[size_t(a)])] = 1;
    if (!F.vars.f.empty()) {
      v[size_t(F.vars.f[size_t(loop[0])])] = 1;
      v[size_t(F.vars.f[size_t(loop[1])])] = 2;
      v[size_t(F.vars.f[size_t(loop[2])])] = 3;
      v[size_t(F.vars.g[size_t(loop[0])])] = 3;
      v[size_t(F.vars.g[size_t(loop[1])])] = 2;
      v[size_t(F.vars.g[size_t(loop[2])])] = 1;
    }
    EXPECT_TRUE(all_rows_hold(F.model, v)) << to_string(var);
  }
}

TEST(DeadEnds, LeafCellCannotBeActive) {
  // (0,2) hangs off (0,1) with no other neighbour
  Instance I = open_instance(2, 3, Mode::OneWay, 1, {{0, 0}}, {{1, 0}}, {{1, 2}});
  Formulation F = build_formulation(I, {Variant::CutBased, Mode::OneWay});
  int y = F.vars.drive({0, 2});
  bool found = false;
  for (const auto& c : F.model.constraints())
    if (c.tag == Tag::DeadEnd && c.terms.size() == 1 && c.terms[0].var == y && c.sense == Sense::Le && c.rhs == 0)
      found = true;
  EXPECT_TRUE(found);
  auto lp = make_backend()->solve_lp(F.model, {{y, 1}});
  EXPECT_FALSE(lp.optimal);
}

TEST(Turns, UniformDiagonalRows) {
  Instance I = open_instance(5, 5, Mode::TwoWay, 2, {{0, 0}});
  Formulation F = build_formulation(I, {Variant::FlowBased, Mode::TwoWay, TurnOption::Uniform});
  int n = 0;
  for (const auto& c : F.model.constraints()) {
    if (c.tag != Tag::Turn) continue;
    ++n;
    EXPECT_EQ(c.terms.size(), 4u);
    EXPECT_EQ(c.rhs, 3);
  }
  EXPECT_GT(n, 0);
  // the L made of (1,1),(1,2),(2,1) plus the diagonal (2,2) is forbidden, the L alone is fine
  std::vector<double> v = zeros(F);
  for (Cell c : {Cell{1, 1}, Cell{1, 2}, Cell{2, 1}, Cell{2, 2}}) v[size_t(F.vars.drive(c))] = 1;
  bool cut = false;
  for (const auto& c : F.model.constraints())
    if (c.tag == Tag::Turn && c.violated(v)) cut = true;
  EXPECT_TRUE(cut);
}

TEST(Turns, ModeMismatchRejected) {
  Instance I = open_instance(3, 3, Mode::TwoWay, 2, {{0, 0}});
  EXPECT_THROW(build_formulation(I, {Variant::FlowBased, Mode::TwoWay, TurnOption::MinSegment}), LotError);
}

TEST(MultiEntrance, NeedsTwoEntrances) {
  Instance I = open_instance(4, 4, Mode::TwoWay, 2, {{0, 0}});
  try {
    build_formulation(I, {Variant::FlowBased, Mode::TwoWay, TurnOption::Off, MultiEntrance::Connected});
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::FewerThanTwoEntrances);
  }
}

TEST(MultiEntrance, SingleKeepsTheFirstRoot) {
  Instance I = open_instance(4, 4, Mode::TwoWay, 2, {{0, 0}, {2, 2}});
  Formulation F = build_formulation(I, {Variant::FlowBased, Mode::TwoWay});
  EXPECT_EQ(F.terminals.roots.size(), 1u);
  EXPECT_EQ(F.terminals.fixed_active.size(), 2u);
  Formulation D = build_formulation(I, {Variant::FlowBased, Mode::TwoWay, TurnOption::Off, MultiEntrance::Disjoint});
  EXPECT_EQ(D.terminals.roots.size(), 2u);
}

TEST(RowSetTest, Dedup) {
  RowSet s;
  LinearConstraint a;
  a.terms = {{1, 0}, {1, 1}};
  a.rhs = 1;
  LinearConstraint b = a;
  std::swap(b.terms[0], b.terms[1]);
  EXPECT_TRUE(s.insert(a));
  EXPECT_FALSE(s.insert(b));
}
