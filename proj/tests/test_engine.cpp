#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "lotforge/engine.hpp"
#include "lotforge/error.hpp"
#include "lotforge/heuristic.hpp"
#include "lotforge/oracle.hpp"

using namespace lotforge;
using lotforge::testing::open_instance;

namespace {

bool mentions(const ValidationReport& r, const std::string& needle) {
  for (const auto& v : r.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

SolveOptions quick(double limit = 30) {
  SolveOptions o;
  o.time_limit_s = limit;
  return o;
}

const Variant kVariants[] = {Variant::FlowBased, Variant::FlowWithVIs, Variant::CutBased};

}  // namespace

TEST(Gap, Convention) {
  EXPECT_EQ(relative_gap(10, 10.0), 0.0);
  EXPECT_NEAR(*relative_gap(10, 12.0), 0.2, 1e-12);
  EXPECT_FALSE(relative_gap(0, 3.0).has_value());
  EXPECT_FALSE(relative_gap(std::nullopt, 3.0).has_value());
}

TEST(Validate, EntranceOnly) {
  Instance I = open_instance(4, 4, Mode::TwoWay, 2, {{0, 0}});
  Layout L;
  L.drive = {{0, 0}};
  EXPECT_TRUE(validate_layout(L, I, Mode::TwoWay).ok());
}

TEST(Validate, DisconnectedDriveField) {
  Instance I = open_instance(6, 6, Mode::TwoWay, 2, {{0, 0}});
  Layout L;
  L.drive = {{0, 0}, {4, 4}};
  auto r = validate_layout(L, I, Mode::TwoWay);
  EXPECT_TRUE(mentions(r, "not connected to an entrance"));
}

TEST(Validate, ParkingWithoutAccessAndOverlap) {
  Instance I = open_instance(4, 4, Mode::TwoWay, 2, {{0, 0}});
  Layout L;
  L.drive = {{0, 0}};
  L.park0 = {{3, 2}, {1, 1}};
  L.stall_count = 2;
  auto r = validate_layout(L, I, Mode::TwoWay);
  EXPECT_TRUE(mentions(r, "no adjacent active drive field"));
  EXPECT_TRUE(mentions(r, "more than one purpose"));
}

TEST(Validate, ExitMustReachEveryCell) {
  // entrance (0,0), exit (0,1); (1,0)->(0,0) and (1,1)->(1,0) but nothing leaves the exit
  Instance I = open_instance(2, 2, Mode::OneWay, 1, {{0, 0}}, {{0, 1}});
  Layout L;
  L.drive = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  L.directions = {{{1, 0}, {0, 0}}, {{1, 1}, {1, 0}}};
  auto r = validate_layout(L, I, Mode::OneWay);
  EXPECT_TRUE(mentions(r, "not reachable from an exit"));
  L.directions.push_back({{0, 1}, {1, 1}});
  EXPECT_TRUE(validate_layout(L, I, Mode::OneWay).ok());
  L.directions.push_back({{1, 0}, {1, 1}});
  EXPECT_TRUE(mentions(validate_layout(L, I, Mode::OneWay), "anti-parallel"));
}

TEST(Solve, BlockedEverywhereButTheEntrance) {
  std::vector<Cell> blocked;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r > 1 || c > 1) blocked.push_back({r, c});
  Instance I = open_instance(4, 4, Mode::TwoWay, 2, {{0, 0}}, {}, blocked);
  for (Variant v : kVariants) {
    auto r = solve_instance(I, {v, Mode::TwoWay}, quick());
    EXPECT_EQ(r.status, SolveStatus::Optimal);
    EXPECT_EQ(r.lower_bound, 0);
    EXPECT_EQ(r.gap, 0.0);
  }
}

TEST(Solve, OneWayWithoutALoopIsInfeasible) {
  Instance I = open_instance(1, 2, Mode::OneWay, 1, {{0, 0}}, {{0, 1}});
  for (Variant v : kVariants) {
    auto r = solve_instance(I, {v, Mode::OneWay}, quick());
    EXPECT_EQ(r.status, SolveStatus::Infeasible) << to_string(v);
    EXPECT_FALSE(r.layout.has_value());
  }
}

TEST(Solve, NonPositiveBudget) {
  Instance I = open_instance(2, 2, Mode::TwoWay, 2, {{0, 0}});
  try {
    solve_instance(I, {}, quick(0));
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetNonPositive);
  }
}

TEST(Solve, OpenStripMatchesOracle) {
  Instance I = open_instance(2, 4, Mode::TwoWay, 2, {{0, 0}});
  auto o = brute_force_two_way(I.grid, I.params);
  for (Variant v : kVariants) {
    auto r = solve_instance(I, {v, Mode::TwoWay}, quick());
    ASSERT_EQ(r.status, SolveStatus::Optimal);
    EXPECT_EQ(r.lower_bound, o.optimum);
  }
}

TEST(Solve, OuterLoopBoundsAreMonotone) {
  std::mt19937_64 rng(11);
  int solved = 0;
  for (int k = 0; k < 40 && solved < 8; ++k) {
    Instance I;
    if (!lotforge::testing::random_two_way(rng, 6, 0.3, I)) continue;
    SolveOptions o = quick();
    o.force_outer_loop = true;
    o.heuristic = false;
    std::vector<RoundRecord> rounds;
    o.on_round = [&](const RoundRecord& r) { rounds.push_back(r); };
    auto outer = solve_instance(I, {Variant::CutBased, Mode::TwoWay}, o);
    auto native = solve_instance(I, {Variant::CutBased, Mode::TwoWay}, quick());
    ASSERT_EQ(outer.status, SolveStatus::Optimal);
    ASSERT_EQ(native.status, SolveStatus::Optimal);
    EXPECT_EQ(outer.lower_bound, native.lower_bound);
    for (size_t i = 1; i < outer.stats.ub_trace.size(); ++i)
      EXPECT_LE(outer.stats.ub_trace[i], outer.stats.ub_trace[i - 1] + 1e-6);
    for (size_t i = 1; i < outer.stats.lb_trace.size(); ++i)
      EXPECT_GE(outer.stats.lb_trace[i], outer.stats.lb_trace[i - 1]);
    // each round's cuts cut off the incumbent that produced them
    for (const auto& [row, x] : outer.cut_log) EXPECT_TRUE(row.violated(x));
    ++solved;
  }
  EXPECT_GE(solved, 5);
}

TEST(Solve, KindsAgreeAndLayoutsValidate) {
  std::mt19937_64 rng(5);
  int n = 0;
  for (int k = 0; k < 30 && n < 6; ++k) {
    Instance I;
    if (!lotforge::testing::random_two_way(rng, 7, 0.25, I)) continue;
    std::optional<int> first;
    for (Variant v : kVariants) {
      auto r = solve_instance(I, {v, Mode::TwoWay}, quick());
      ASSERT_EQ(r.status, SolveStatus::Optimal);
      ASSERT_TRUE(r.layout);
      EXPECT_TRUE(validate_layout(*r.layout, I, Mode::TwoWay).ok());
      if (!first) first = r.lower_bound;
      EXPECT_EQ(r.lower_bound, first);
    }
    ++n;
  }
}

TEST(Solve, FlowsAreIntegralAtTwoWayOptima) {
  std::mt19937_64 rng(3);
  int n = 0;
  for (int k = 0; k < 30 && n < 4; ++k) {
    Instance I;
    if (!lotforge::testing::random_two_way(rng, 6, 0.2, I)) continue;
    Formulation F = build_formulation(I, {Variant::FlowBased, Mode::TwoWay});
    auto r = solve_formulation(F, quick());
    ASSERT_EQ(r.status, SolveStatus::Optimal);
    double res = flow_integrality_residual(F, r.assignment);
    EXPECT_GE(res, 0);
    EXPECT_LE(res, 1e-6);
    ++n;
  }
}

TEST(Heuristic, OracleWitnessesSatisfyEveryRow) {
  // a completed optimal layout must pass every row, lazy ones included, in each model
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int k = 0; k < 60 && checked < 10; ++k) {
    Instance I;
    if (!lotforge::testing::random_two_way(rng, 5, 0.3, I)) continue;
    OracleResult o;
    try {
      o = brute_force_two_way(I.grid, I.params);
    } catch (const LotError&) {
      continue;  // past the oracle's size limit
    }
    for (Variant v : kVariants) {
      Formulation F = build_formulation(I, {v, Mode::TwoWay});
      auto x = complete_assignment(F, o.witness);
      EXPECT_TRUE(satisfies_all_rows(F.model, x)) << to_string(v);
      EXPECT_EQ(F.model.objective(x), o.optimum);
    }
    ++checked;
  }
  for (int k = 0; k < 200 && checked < 20; ++k) {
    Instance I;
    if (!lotforge::testing::random_one_way(rng, 3, 4, 12, I)) continue;
    auto o = brute_force_one_way(I.grid, I.params);
    if (!o.feasible) continue;
    for (Variant v : kVariants) {
      Formulation F = build_formulation(I, {v, Mode::OneWay});
      auto x = complete_assignment(F, o.witness);
      EXPECT_TRUE(satisfies_all_rows(F.model, x)) << to_string(v);
    }
    ++checked;
  }
  EXPECT_GE(checked, 15);
}

TEST(Heuristic, RoundedLpPointsAreFeasible) {
  std::mt19937_64 rng(23);
  int found = 0;
  for (int k = 0; k < 40; ++k) {
    Instance I;
    Mode mode = k % 2 ? Mode::OneWay : Mode::TwoWay;
    bool ok = mode == Mode::TwoWay ? lotforge::testing::random_two_way(rng, 8, 0.2, I)
                                   : lotforge::testing::random_one_way(rng, 5, 6, 30, I);
    if (!ok) continue;
    Formulation F = build_formulation(I, {Variant::FlowWithVIs, mode});
    auto lp = make_backend()->solve_lp(F.model, {});
    if (!lp.optimal) continue;
    auto x = round_to_layout(F, lp.x);
    if (!x) continue;
    ++found;
    EXPECT_TRUE(satisfies_all_rows(F.model, *x));
    Layout L = extract_layout(F.model, *x);
    EXPECT_TRUE(validate_layout(L, I, mode).ok());
    EXPECT_LE(F.model.objective(*x), lp.objective + 1e-6);
  }
  EXPECT_GT(found, 5);
}

TEST(Compare, TrivialInstanceTable) {
  Instance I = open_instance(2, 4, Mode::TwoWay, 2, {{0, 0}});
  std::vector<FormulationKind> kinds;
  for (Variant v : kVariants) kinds.push_back({v, Mode::TwoWay});
  auto t = compare_formulations({{"strip", I}}, kinds, quick(), 2);
  ASSERT_EQ(t.rows.size(), 3u);
  for (const auto& r : t.rows) {
    EXPECT_EQ(r.status, SolveStatus::Optimal);
    EXPECT_EQ(r.lb, t.rows[0].lb);
    EXPECT_EQ(r.group, 1);
  }
  bool saw_group1 = false;
  for (const auto& s : t.summaries) {
    if (s.group != 1) continue;
    saw_group1 = true;
    EXPECT_EQ(s.optimal, 1);
  }
  EXPECT_TRUE(saw_group1);
}
