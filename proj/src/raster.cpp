#include "lotforge/raster.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lotforge/error.hpp"

namespace lotforge {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

// Sutherland-Hodgman against one half-plane; keep points where inside(p) holds
template <class Inside, class Cross>
std::vector<Point> clip_edge(const std::vector<Point>& in, Inside inside, Cross cross) {
  std::vector<Point> out;
  if (in.empty()) return out;
  Point prev = in.back();
  bool prev_in = inside(prev);
  for (const Point& cur : in) {
    bool cur_in = inside(cur);
    if (cur_in) {
      if (!prev_in) out.push_back(cross(prev, cur));
      out.push_back(cur);
    } else if (prev_in) {
      out.push_back(cross(prev, cur));
    }
    prev = cur;
    prev_in = cur_in;
  }
  return out;
}

Point at_x(Point a, Point b, double x) {
  double t = (x - a.x) / (b.x - a.x);
  return {x, a.y + t * (b.y - a.y)};
}

Point at_y(Point a, Point b, double y) {
  double t = (y - a.y) / (b.y - a.y);
  return {a.x + t * (b.x - a.x), y};
}

}  // namespace

double polygon_area(const std::vector<Point>& ring) {
  double s = 0;
  for (size_t i = 0, n = ring.size(); i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return std::abs(s) / 2;
}

double clipped_area(const std::vector<Point>& ring, double x0, double y0, double x1, double y1) {
  auto p = clip_edge(ring, [&](Point q) { return q.x >= x0; }, [&](Point a, Point b) { return at_x(a, b, x0); });
  p = clip_edge(p, [&](Point q) { return q.x <= x1; }, [&](Point a, Point b) { return at_x(a, b, x1); });
  p = clip_edge(p, [&](Point q) { return q.y >= y0; }, [&](Point a, Point b) { return at_y(a, b, y0); });
  p = clip_edge(p, [&](Point q) { return q.y <= y1; }, [&](Point a, Point b) { return at_y(a, b, y1); });
  return p.size() < 3 ? 0.0 : polygon_area(p);
}

PlanePolygon project_local(const GeoPolygon& poly) {
  if (poly.empty() || poly[0].size() < 3) throw LotError(ErrorCode::DegeneratePolygon, "outer ring needs 3 vertices");
  // area centroid in degrees; fine at lot scale
  const auto& outer = poly[0];
  double a2 = 0, cx = 0, cy = 0;
  for (size_t i = 0, n = outer.size(); i < n; ++i) {
    const auto& p = outer[i];
    const auto& q = outer[(i + 1) % n];
    double cr = p.lon * q.lat - q.lon * p.lat;
    a2 += cr;
    cx += (p.lon + q.lon) * cr;
    cy += (p.lat + q.lat) * cr;
  }
  if (std::abs(a2) < 1e-18) throw LotError(ErrorCode::DegeneratePolygon, "polygon has zero area");
  double lon0 = cx / (3 * a2), lat0 = cy / (3 * a2);
  double kx = kEarthRadiusM * std::cos(lat0 * kDeg) * kDeg;
  double ky = kEarthRadiusM * kDeg;
  PlanePolygon out;
  for (const auto& ring : poly) {
    std::vector<Point> r;
    for (const auto& p : ring) r.push_back({(p.lon - lon0) * kx, (p.lat - lat0) * ky});
    out.push_back(std::move(r));
  }
  return out;
}

GridSpec rasterize_plane(const PlanePolygon& poly_in, double cell, const Placement& placement) {
  if (!(cell > 0)) throw LotError(ErrorCode::CellSizeNonPositive, "cell size must be positive");
  if (poly_in.empty() || poly_in[0].size() < 3 || polygon_area(poly_in[0]) <= 1e-12)
    throw LotError(ErrorCode::DegeneratePolygon, "polygon has zero area");

  PlanePolygon poly = poly_in;
  if (placement.rotation_deg != 0) {
    double mx = 0, my = 0;
    for (const Point& p : poly[0]) mx += p.x, my += p.y;
    mx /= double(poly[0].size());
    my /= double(poly[0].size());
    double c = std::cos(placement.rotation_deg * kDeg), s = std::sin(placement.rotation_deg * kDeg);
    for (auto& ring : poly)
      for (Point& p : ring) {
        double dx = p.x - mx, dy = p.y - my;
        p = {mx + c * dx - s * dy, my + s * dx + c * dy};
      }
  }

  double xmin = poly[0][0].x, xmax = xmin, ymin = poly[0][0].y, ymax = ymin;
  for (const Point& p : poly[0]) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }

  GridSpec g;
  g.nu = std::max(1, int(std::ceil((xmax - xmin) / cell - 1e-9)));
  g.mu = std::max(1, int(std::ceil((ymax - ymin) / cell - 1e-9)));
  const double cell_area = cell * cell;
  const double threshold = std::max(placement.min_overlap_fraction * cell_area, 1e-9 * cell_area);
  for (int r = 0; r < g.mu; ++r) {
    for (int c = 0; c < g.nu; ++c) {
      double x0 = xmin + c * cell, x1 = x0 + cell;
      double y1 = ymax - r * cell, y0 = y1 - cell;
      double area = clipped_area(poly[0], x0, y0, x1, y1);
      for (size_t h = 1; h < poly.size(); ++h) area -= clipped_area(poly[h], x0, y0, x1, y1);
      if (!(area > threshold)) g.blocked.push_back({r, c});
    }
  }
  return g;
}

GridSpec rasterize_polygon(const GeoPolygon& poly, double cell_size_m, const Placement& placement) {
  if (!(cell_size_m > 0)) throw LotError(ErrorCode::CellSizeNonPositive, "cell size must be positive");
  return rasterize_plane(project_local(poly), cell_size_m, placement);
}

}  // namespace lotforge
