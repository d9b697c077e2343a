#include <gtest/gtest.h>

#include <sstream>

#include "helpers.hpp"
#include "lotforge/error.hpp"
#include "lotforge/io.hpp"

using namespace lotforge;
using lotforge::testing::open_instance;

TEST(InstanceJson, RoundTripIsByteStable) {
  json j = json::parse(R"({"rows":4,"cols":5,"mode":"one-way","blocked":[[3,4],[0,4],[3,4]],
      "entrances":[[0,0]],"exits":[[0,1]]})");
  Instance I = instance_from_json(j);
  EXPECT_EQ(I.params.delta, 1);
  EXPECT_EQ(I.grid.blocked, (std::vector<Cell>{{0, 4}, {3, 4}}));
  std::string once = instance_to_json(I).dump();
  std::string twice = instance_to_json(instance_from_json(json::parse(once))).dump();
  EXPECT_EQ(once, twice);
}

TEST(InstanceJson, DefaultsForTwoWay) {
  Instance I = instance_from_json(json::parse(R"({"rows":3,"cols":3,"entrances":[[0,0]]})"));
  EXPECT_EQ(I.grid.mode, Mode::TwoWay);
  EXPECT_EQ(I.params.omega, 1);
  EXPECT_EQ(I.params.ell, 2);
  EXPECT_EQ(I.params.delta, 2);
}

TEST(InstanceJson, InvalidRejected) {
  EXPECT_THROW(instance_from_json(json::parse(R"({"rows":0,"cols":3,"entrances":[[0,0]]})")), LotError);
  EXPECT_THROW(instance_from_json(json::parse(R"({"rows":3,"cols":3,"entrances":[[5,5]]})")), LotError);
}

TEST(LayoutJson, RoundTrip) {
  Layout L;
  L.park0 = {{1, 2}};
  L.park90 = {{3, 0}, {3, 1}};
  L.drive = {{0, 0}, {0, 1}};
  L.directions = {{{0, 1}, {0, 0}}};
  L.stall_count = 3;
  EXPECT_EQ(layout_from_json(layout_to_json(L)), L);
}

TEST(Parse, Names) {
  EXPECT_EQ(parse_mode("one-way"), Mode::OneWay);
  EXPECT_EQ(parse_variant("bnc"), Variant::CutBased);
  EXPECT_EQ(parse_variant("flow-vi"), Variant::FlowWithVIs);
  EXPECT_EQ(parse_turn("no_sharp"), TurnOption::NoSharp);
  EXPECT_EQ(parse_multi("disjoint"), MultiEntrance::Disjoint);
  try {
    parse_format("png");
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFormat);
  }
}

TEST(Render, EntranceThenDrive) {
  Instance I = open_instance(1, 2, Mode::TwoWay, 1, {{0, 0}});
  Layout L;
  L.drive = {{0, 0}, {0, 1}};
  EXPECT_EQ(render_ascii(L, I), "ED\n");
}

TEST(Render, LegendAndBlocked) {
  Instance I = open_instance(3, 4, Mode::TwoWay, 1, {{0, 0}}, {}, {{2, 3}});
  Layout L;
  L.drive = {{0, 0}, {1, 0}, {2, 0}};
  L.park0 = {{0, 1}};
  L.park90 = {{1, 1}};
  L.stall_count = 2;
  EXPECT_EQ(render_ascii(L, I), "EGG.\nDB..\nDB.#\n");
}

TEST(Render, DirectionGrid) {
  Instance I = open_instance(2, 2, Mode::OneWay, 1, {{0, 0}}, {{0, 1}});
  Layout L;
  L.drive = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  L.directions = {{{0, 1}, {1, 1}}, {{1, 1}, {1, 0}}, {{1, 0}, {0, 0}}};
  RenderStyle s;
  s.show_directions = true;
  EXPECT_EQ(render_ascii(L, I, s), "EX\nDD\n\nov\n^<\n");
  s.flip_arrows = true;
  EXPECT_EQ(render_ascii(L, I, s), "EX\nDD\n\nvo\n>^\n");
}

TEST(Render, DirectionsNeedOneWay) {
  Instance I = open_instance(1, 2, Mode::TwoWay, 1, {{0, 0}});
  Layout L;
  L.drive = {{0, 0}};
  RenderStyle s;
  s.show_directions = true;
  EXPECT_THROW(render_ascii(L, I, s), LotError);
}

TEST(Render, SvgHasOneRectPerCell) {
  Instance I = open_instance(2, 3, Mode::TwoWay, 1, {{0, 0}});
  Layout L;
  L.drive = {{0, 0}};
  std::string svg = render_svg(L, I);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  size_t rects = 0;
  for (size_t p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1)) ++rects;
  EXPECT_GE(rects, 6u);
}

TEST(Bench, CsvHasHeaderAndRows) {
  BenchTable t;
  BenchRow r;
  r.instance = "a";
  r.status = SolveStatus::Optimal;
  r.lb = 3;
  r.ub = 3;
  r.gap = 0;
  r.group = 1;
  t.rows.push_back(r);
  BenchSummary s;
  s.group = 1;
  s.instances = 1;
  s.optimal = 1;
  t.summaries.push_back(s);
  std::string csv = bench_csv(t);
  std::istringstream in(csv);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_GE(lines, 3);
  EXPECT_NE(csv.find("a,"), std::string::npos);
}

TEST(Generate, DeterministicAndValid) {
  GenOptions o;
  o.rows = o.cols = 8;
  o.mode = Mode::OneWay;
  o.seed = 42;
  Instance a = generate_instance(o), b = generate_instance(o);
  EXPECT_EQ(instance_to_json(a).dump(), instance_to_json(b).dump());
  EXPECT_EQ(a.params.delta, 1);
  ASSERT_EQ(a.grid.exits.size(), 1u);
  Cell e = a.grid.entrances[0], x = a.grid.exits[0];
  EXPECT_EQ(std::abs(e.row - x.row) + std::abs(e.col - x.col), 1);
}
