#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "lotforge/engine.hpp"
#include "lotforge/raster.hpp"

namespace lotforge {

using json = nlohmann::json;

// ---- instance / layout / result JSON ----

Instance instance_from_json(const json& j);
// canonical: sorted cell lists, keys in fixed order
json instance_to_json(const Instance& inst);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

json layout_to_json(const Layout& layout);
Layout layout_from_json(const json& j);

json result_to_json(const SolveResult& r, const FormulationKind& kind);
json round_to_json(const RoundRecord& rec);

Mode parse_mode(const std::string& s);
Variant parse_variant(const std::string& s);
TurnOption parse_turn(const std::string& s);
MultiEntrance parse_multi(const std::string& s);

// ---- rendering ----

enum class RenderFormat { Ascii, Svg };

struct RenderStyle {
  RenderFormat format = RenderFormat::Ascii;
  bool show_directions = false;
  bool flip_arrows = false;
};

RenderFormat parse_format(const std::string& s);

// `#` blocked, `G` 0-degree parking, `B` 90-degree parking, `D` drive, `E` entrance, `X` exit,
// `.` unused; optional direction grid after a blank line
std::string render_ascii(const Layout& layout, const Instance& inst, const RenderStyle& style = {});
std::string render_svg(const Layout& layout, const Instance& inst, const RenderStyle& style = {});
std::string render(const Layout& layout, const Instance& inst, const RenderStyle& style);

// ---- benchmark table ----

std::string bench_csv(const BenchTable& table);

// ---- GeoJSON ----

// Polygon geometry, Feature or FeatureCollection (first polygon wins); MultiPolygon uses its first part
GeoPolygon parse_geojson(const json& j);

// ---- synthetic instances ----

struct GenOptions {
  int rows = 10;
  int cols = 10;
  double blocked_rate = 0.2;
  Mode mode = Mode::TwoWay;
  FieldParams params;  // delta is forced to 1 for one-way unless set explicitly
  bool keep_delta = false;
  uint64_t seed = 1;
};

// uniform random blocked cells; entrance on the boundary, inside the largest drive region that
// touches it; exit (one-way) next to the entrance.
// Retries with fresh draws until the terminals fit.
Instance generate_instance(const GenOptions& opts);

}  // namespace lotforge
