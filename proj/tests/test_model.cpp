#include <gtest/gtest.h>

#include <sstream>

#include "lotforge/error.hpp"
#include "lotforge/model.hpp"

using namespace lotforge;

namespace {

VarRef park(int r, int c) { return {VarKind::Park0, {r, c}, {}}; }
VarRef drive(int r, int c) { return {VarKind::Drive, {r, c}, {}}; }

}  // namespace

TEST(ModelIRTest, VariablesAndObjective) {
  ModelIR m;
  int a = m.add_variable(park(0, 0), Domain::Binary, 1);
  int b = m.add_variable(drive(0, 1), Domain::Binary, 1);
  EXPECT_EQ(m.find(park(0, 0)), a);
  EXPECT_EQ(m.find(park(5, 5)), -1);
  EXPECT_EQ(m.objective_coef(a), 1);
  EXPECT_EQ(m.objective_coef(b), 0);
  EXPECT_EQ(m.objective({1, 1}), 1);
}

TEST(ModelIRTest, ConstraintViolation) {
  LinearConstraint c;
  c.terms = {{1, 0}, {-1, 1}};
  c.sense = Sense::Le;
  c.rhs = 0;
  EXPECT_FALSE(c.violated({0, 1}));
  EXPECT_TRUE(c.violated({1, 0}));
  EXPECT_DOUBLE_EQ(c.violation({1, 0}), 1);
  c.sense = Sense::Eq;
  EXPECT_TRUE(c.violated({0, 1}));
}

TEST(ModelIRTest, MalformedRowsRejected) {
  ModelIR m;
  m.add_variable(park(0, 0), Domain::Binary, 1);
  LinearConstraint c;
  c.terms = {{1, 3}};
  m.add(c);
  try {
    m.check();
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ModelMalformed);
  }
}

TEST(ModelIRTest, LpDumpNamesVariables) {
  ModelIR m;
  m.add_variable(park(1, 2), Domain::Binary, 1);
  std::ostringstream os;
  m.write_lp(os);
  EXPECT_NE(os.str().find(m.var_name(0)), std::string::npos);
}

TEST(Backend, EmptyObjectiveIsOptimalAtZero) {
  ModelIR m;
  m.add_variable(drive(0, 0), Domain::Binary, 1);
  m.fix(0, 1);
  auto b = make_backend();
  auto r = b->solve(m, {}, {});
  EXPECT_EQ(r.status, BackendStatus::Optimal);
  EXPECT_DOUBLE_EQ(r.objective, 0);
  EXPECT_NEAR(r.bound, 0, 1e-9);
}

TEST(Backend, SmallPacking) {
  // two parking variables sharing a cell, one free one
  ModelIR m;
  int a = m.add_variable(park(0, 0), Domain::Binary, 1);
  int b = m.add_variable(park(0, 1), Domain::Binary, 1);
  int c = m.add_variable(park(3, 3), Domain::Binary, 1);
  LinearConstraint row;
  row.terms = {{1, a}, {1, b}};
  row.rhs = 1;
  m.add(row);
  auto r = make_backend()->solve(m, {}, {});
  ASSERT_EQ(r.status, BackendStatus::Optimal);
  EXPECT_DOUBLE_EQ(r.objective, 2);
  EXPECT_DOUBLE_EQ(r.x[size_t(c)], 1);
}

TEST(Backend, LazyRowsGoThroughTheCallback) {
  ModelIR m;
  int a = m.add_variable(park(0, 0), Domain::Binary, 1);
  int b = m.add_variable(park(0, 1), Domain::Binary, 1);
  LinearConstraint row;
  row.terms = {{1, a}, {1, b}};
  row.rhs = 1;
  row.lazy = true;
  m.add(row);
  auto backend = make_backend();
  ASSERT_TRUE(backend->supports_lazy());
  auto r = backend->solve(m, {}, {});
  ASSERT_EQ(r.status, BackendStatus::Optimal);
  EXPECT_DOUBLE_EQ(r.objective, 1);
  // incumbent callback cutting off everything with a positive stall count
  int calls = 0;
  IncumbentCallback cb = [&](const std::vector<double>& x, const SearchState&) {
    ++calls;
    std::vector<LinearConstraint> out;
    if (x[size_t(a)] + x[size_t(b)] > 0.5) {
      LinearConstraint none;
      none.terms = {{1, a}, {1, b}};
      none.rhs = 0;
      none.tag = Tag::FeasibilityCut;
      out.push_back(none);
    }
    return out;
  };
  r = backend->solve(m, {}, cb);
  ASSERT_EQ(r.status, BackendStatus::Optimal);
  EXPECT_DOUBLE_EQ(r.objective, 0);
  EXPECT_GT(calls, 0);
}

TEST(Backend, InfeasibleModel) {
  ModelIR m;
  int a = m.add_variable(drive(0, 0), Domain::Binary, 1);
  m.fix(a, 1);
  LinearConstraint row;
  row.terms = {{1, a}};
  row.rhs = 0;
  m.add(row);
  EXPECT_EQ(make_backend()->solve(m, {}, {}).status, BackendStatus::Infeasible);
}

TEST(Backend, UnknownNameThrows) {
  try {
    make_backend("no-such-solver");
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BackendUnavailable);
  }
}

TEST(Extract, FractionalBinaryRejected) {
  ModelIR m;
  m.add_variable(park(0, 0), Domain::Binary, 1);
  try {
    extract_layout(m, {0.5});
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonIntegralAssignment);
  }
}

TEST(Extract, EntranceOnly) {
  ModelIR m;
  m.add_variable(drive(0, 0), Domain::Binary, 1);
  m.add_variable(park(1, 0), Domain::Binary, 1);
  Layout L = extract_layout(m, {1, 0});
  EXPECT_EQ(L.drive, (std::vector<Cell>{{0, 0}}));
  EXPECT_EQ(L.stall_count, 0);
}

TEST(Extract, ArcWithInactiveEndpoint) {
  ModelIR m;
  m.add_variable(drive(0, 0), Domain::Binary, 1);
  m.add_variable({VarKind::DirZ, {0, 0}, {0, 1}}, Domain::Binary, 1);
  try {
    extract_layout(m, {1, 1});
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Internal);
  }
}
