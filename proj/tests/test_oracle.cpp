#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "helpers.hpp"
#include "lotforge/engine.hpp"
#include "lotforge/error.hpp"
#include "lotforge/oracle.hpp"

using namespace lotforge;
using lotforge::testing::open_instance;

namespace {

// plain enumeration over every subset of the candidates
int brute_packing(const std::vector<uint64_t>& conflict, uint64_t candidates) {
  int n = int(conflict.size()), best = 0;
  for (uint64_t s = 0; s < (uint64_t(1) << n); ++s) {
    if ((s & ~candidates) != 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if ((s >> i & 1) && (conflict[size_t(i)] & s)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

}  // namespace

TEST(Packing, MatchesEnumeration) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + int(rng() % 12);
    std::vector<uint64_t> conflict(size_t(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) conflict[size_t(i)] |= uint64_t(1) << j, conflict[size_t(j)] |= uint64_t(1) << i;
    uint64_t cand = rng() & ((uint64_t(1) << n) - 1);
    uint64_t pick = max_packing(conflict, cand);
    EXPECT_EQ(pick & ~cand, 0u);
    for (int i = 0; i < n; ++i)
      if (pick >> i & 1) EXPECT_EQ(conflict[size_t(i)] & pick, 0u);
    EXPECT_EQ(std::popcount(pick), brute_packing(conflict, cand));
  }
}

TEST(OracleTwoWay, WitnessIsValidAndOptimal) {
  Instance I = open_instance(3, 4, Mode::TwoWay, 2, {{0, 0}});
  auto o = brute_force_two_way(I.grid, I.params);
  EXPECT_TRUE(o.feasible);
  EXPECT_EQ(o.witness.stall_count, o.optimum);
  EXPECT_TRUE(validate_layout(o.witness, I, Mode::TwoWay).ok());
  EXPECT_GT(o.explored, 0u);
}

TEST(OracleTwoWay, EntranceFieldOnly) {
  Instance I = open_instance(2, 2, Mode::TwoWay, 2, {{0, 0}});
  auto o = brute_force_two_way(I.grid, I.params);
  EXPECT_EQ(o.optimum, 0);
  EXPECT_EQ(o.explored, 1u);
}

TEST(OracleTwoWay, TooLarge) {
  Instance I = open_instance(12, 12, Mode::TwoWay, 2, {{0, 0}});
  try {
    brute_force_two_way(I.grid, I.params);
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InstanceTooLarge);
  }
}

TEST(OracleOneWay, NoLoopNoLayout) {
  Instance I = open_instance(1, 3, Mode::OneWay, 1, {{0, 0}}, {{0, 1}});
  auto o = brute_force_one_way(I.grid, I.params);
  EXPECT_FALSE(o.feasible);
}

TEST(OracleOneWay, SquareLoop) {
  // the four cells of a 2x2 square form the only loop; nothing is left to park on
  Instance I = open_instance(2, 2, Mode::OneWay, 1, {{0, 0}}, {{0, 1}});
  auto o = brute_force_one_way(I.grid, I.params);
  ASSERT_TRUE(o.feasible);
  EXPECT_EQ(o.optimum, 0);
  EXPECT_EQ(o.witness.drive.size(), 4u);
  EXPECT_TRUE(validate_layout(o.witness, I, Mode::OneWay).ok());
}

TEST(OracleOneWay, WitnessesValidate) {
  std::mt19937_64 rng(31);
  int n = 0;
  for (int k = 0; k < 200 && n < 15; ++k) {
    Instance I;
    if (!lotforge::testing::random_one_way(rng, 3 + int(k % 2), 4, 12, I)) continue;
    auto o = brute_force_one_way(I.grid, I.params);
    if (!o.feasible) continue;
    EXPECT_TRUE(validate_layout(o.witness, I, Mode::OneWay).ok());
    EXPECT_EQ(o.witness.stall_count, o.optimum);
    ++n;
  }
  EXPECT_GE(n, 10);
}
