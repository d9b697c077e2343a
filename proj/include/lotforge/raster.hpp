#pragma once

#include <vector>

#include "lotforge/grid.hpp"

namespace lotforge {

struct LonLat {
  double lon = 0;
  double lat = 0;
};

struct Point {
  double x = 0;
  double y = 0;
};

// first ring is the outer boundary, the rest are holes
using GeoPolygon = std::vector<std::vector<LonLat>>;
using PlanePolygon = std::vector<std::vector<Point>>;

struct Placement {
  double rotation_deg = 0;  // counter-clockwise, applied about the centroid after projection
  // a cell is usable when its overlap with the lot exceeds this fraction of the cell area
  double min_overlap_fraction = 0;
};

inline constexpr double kEarthRadiusM = 6371008.8;

// equirectangular projection about the area centroid of the outer ring, in metres
PlanePolygon project_local(const GeoPolygon& poly);

double polygon_area(const std::vector<Point>& ring);

// area of ring intersected with the axis-aligned box [x0,x1]x[y0,y1]
double clipped_area(const std::vector<Point>& ring, double x0, double y0, double x1, double y1);

// grid over the bounding box, origin at its min corner, row 0 along the max-y (north) edge.
// Returns dimensions and blocked cells only; terminals are for the caller to set.
GridSpec rasterize_plane(const PlanePolygon& poly, double cell_size_m, const Placement& placement = {});

GridSpec rasterize_polygon(const GeoPolygon& poly, double cell_size_m, const Placement& placement = {});

}  // namespace lotforge
