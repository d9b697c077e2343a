#include <gtest/gtest.h>

#include <cmath>

#include "lotforge/error.hpp"
#include "lotforge/io.hpp"
#include "lotforge/raster.hpp"

using namespace lotforge;

TEST(Raster, RectangleTilesExactly) {
  PlanePolygon rect{{{0, 0}, {9, 0}, {9, 6}, {0, 6}}};
  GridSpec g = rasterize_plane(rect, 3);
  EXPECT_EQ(g.mu, 2);
  EXPECT_EQ(g.nu, 3);
  EXPECT_TRUE(g.blocked.empty());
}

TEST(Raster, TriangleCornerCellHasNoArea) {
  // the cell opposite the right angle meets the hypotenuse in a single point
  PlanePolygon tri{{{0, 0}, {6, 0}, {0, 6}}};
  GridSpec g = rasterize_plane(tri, 3);
  EXPECT_EQ(g.mu, 2);
  EXPECT_EQ(g.nu, 2);
  EXPECT_EQ(g.blocked, (std::vector<Cell>{{0, 1}}));
  EXPECT_NEAR(clipped_area(tri[0], 3, 3, 6, 6), 0.0, 1e-12);
  EXPECT_NEAR(clipped_area(tri[0], 0, 3, 3, 6), 4.5, 1e-12);
}

TEST(Raster, OverlapThreshold) {
  PlanePolygon tri{{{0, 0}, {6, 0}, {0, 6}}};
  Placement p;
  p.min_overlap_fraction = 0.6;  // half-covered cells drop out
  GridSpec g = rasterize_plane(tri, 3, p);
  EXPECT_EQ(g.blocked, (std::vector<Cell>{{0, 0}, {0, 1}, {1, 1}}));
}

TEST(Raster, HolesBlockCells) {
  PlanePolygon donut{{{0, 0}, {9, 0}, {9, 9}, {0, 9}}, {{3, 3}, {6, 3}, {6, 6}, {3, 6}}};
  GridSpec g = rasterize_plane(donut, 3);
  EXPECT_EQ(g.blocked, (std::vector<Cell>{{1, 1}}));
}

TEST(Raster, QuarterTurnSwapsDimensions) {
  PlanePolygon rect{{{0, 0}, {9, 0}, {9, 6}, {0, 6}}};
  Placement p;
  p.rotation_deg = 90;
  GridSpec g = rasterize_plane(rect, 3, p);
  EXPECT_EQ(g.mu, 3);
  EXPECT_EQ(g.nu, 2);
  EXPECT_TRUE(g.blocked.empty());
}

TEST(Raster, Errors) {
  PlanePolygon rect{{{0, 0}, {9, 0}, {9, 6}, {0, 6}}};
  try {
    rasterize_plane(rect, 0);
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::CellSizeNonPositive);
  }
  PlanePolygon line{{{0, 0}, {1, 1}, {2, 2}}};
  try {
    rasterize_plane(line, 1);
    FAIL();
  } catch (const LotError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegeneratePolygon);
  }
}

TEST(Raster, ProjectionKeepsMetricScale) {
  // 0.001 degrees of latitude is about 111 m anywhere
  GeoPolygon sq{{{-73.95, 40.7}, {-73.949, 40.7}, {-73.949, 40.701}, {-73.95, 40.701}}};
  auto plane = project_local(sq);
  double h = plane[0][2].y - plane[0][1].y;
  double w = plane[0][1].x - plane[0][0].x;
  EXPECT_NEAR(h, 111.19, 0.1);
  EXPECT_NEAR(w / h, std::cos(40.7005 * M_PI / 180), 1e-4);
}

TEST(Raster, GeoJsonFeatureDropsClosingVertex) {
  json j = json::parse(R"({"type":"Feature","geometry":{"type":"Polygon","coordinates":
      [[[0,0],[0.001,0],[0.001,0.001],[0,0.001],[0,0]]]}})");
  GeoPolygon p = parse_geojson(j);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].size(), 4u);
}
