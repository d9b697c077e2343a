#include "lotforge/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "lotforge/error.hpp"

namespace lotforge {

namespace {

json cells_json(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  json a = json::array();
  for (Cell c : cells) a.push_back({c.row, c.col});
  return a;
}

std::vector<Cell> cells_from(const json& j, const char* key) {
  std::vector<Cell> out;
  if (!j.contains(key) || j[key].is_null()) return out;
  const json& a = j[key];
  if (!a.is_array()) throw LotError(ErrorCode::InvalidInstance, std::string(key) + " must be an array of [row, col]");
  for (const json& e : a) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw LotError(ErrorCode::InvalidInstance, std::string(key) + " entries must be [row, col]");
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

int int_field(const json& j, const char* key, std::optional<int> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw LotError(ErrorCode::InvalidInstance, std::string("missing field ") + key);
  }
  if (!j[key].is_number_integer()) throw LotError(ErrorCode::InvalidInstance, std::string(key) + " must be an integer");
  return j[key].get<int>();
}

}  // namespace

Mode parse_mode(const std::string& s) {
  if (s == "two-way" || s == "twoway" || s == "two_way") return Mode::TwoWay;
  if (s == "one-way" || s == "oneway" || s == "one_way") return Mode::OneWay;
  throw LotError(ErrorCode::InvalidInstance, "unknown mode '" + s + "'");
}

Variant parse_variant(const std::string& s) {
  if (s == "flow") return Variant::FlowBased;
  if (s == "flow-vi" || s == "flowvi" || s == "vi") return Variant::FlowWithVIs;
  if (s == "bnc" || s == "cut" || s == "branch-and-cut") return Variant::CutBased;
  throw LotError(ErrorCode::InvalidInstance, "unknown formulation '" + s + "'");
}

TurnOption parse_turn(const std::string& s) {
  for (TurnOption t : {TurnOption::Off, TurnOption::Uniform, TurnOption::NoSharp, TurnOption::NoOppositeOverlap,
                       TurnOption::MinSegment})
    if (s == to_string(t)) return t;
  throw LotError(ErrorCode::InvalidInstance, "unknown turn option '" + s + "'");
}

MultiEntrance parse_multi(const std::string& s) {
  for (MultiEntrance m : {MultiEntrance::Single, MultiEntrance::Connected, MultiEntrance::Disjoint})
    if (s == to_string(m)) return m;
  throw LotError(ErrorCode::InvalidInstance, "unknown multi-entrance option '" + s + "'");
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw LotError(ErrorCode::InvalidInstance, "instance must be a JSON object");
  Instance inst;
  GridSpec& g = inst.grid;
  g.mu = int_field(j, "rows");
  g.nu = int_field(j, "cols");
  g.blocked = cells_from(j, "blocked");
  g.existing_drive = cells_from(j, "existing_drive");
  g.entrances = cells_from(j, "entrances");
  g.exits = cells_from(j, "exits");
  g.mode = j.contains("mode") ? parse_mode(j["mode"].get<std::string>()) : Mode::TwoWay;
  inst.params.omega = int_field(j, "omega", 1);
  inst.params.ell = int_field(j, "ell", 2);
  inst.params.delta = int_field(j, "delta", g.mode == Mode::TwoWay ? 2 : 1);
  canonicalize(g);
  validate_instance(g, inst.params);
  return inst;
}

json instance_to_json(const Instance& inst) {
  const GridSpec& g = inst.grid;
  json j;
  j["rows"] = g.mu;
  j["cols"] = g.nu;
  j["blocked"] = cells_json(g.blocked);
  j["existing_drive"] = cells_json(g.existing_drive);
  j["entrances"] = cells_json(g.entrances);
  j["exits"] = cells_json(g.exits);
  j["omega"] = inst.params.omega;
  j["ell"] = inst.params.ell;
  j["delta"] = inst.params.delta;
  j["mode"] = to_string(g.mode);
  return j;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LotError(ErrorCode::InvalidInstance, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw LotError(ErrorCode::InvalidInstance, path + ": " + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  out << instance_to_json(inst).dump() << "\n";
}

json layout_to_json(const Layout& L) {
  json j;
  j["park0"] = cells_json(L.park0);
  j["park90"] = cells_json(L.park90);
  j["drive"] = cells_json(L.drive);
  auto dirs = L.directions;
  std::sort(dirs.begin(), dirs.end());
  json d = json::array();
  for (auto& [a, b] : dirs) d.push_back({{a.row, a.col}, {b.row, b.col}});
  j["directions"] = d;
  j["stall_count"] = L.stall_count;
  return j;
}

Layout layout_from_json(const json& j) {
  if (!j.is_object()) throw LotError(ErrorCode::InvalidInstance, "layout must be a JSON object");
  Layout L;
  L.park0 = cells_from(j, "park0");
  L.park90 = cells_from(j, "park90");
  L.drive = cells_from(j, "drive");
  if (j.contains("directions")) {
    for (const json& e : j["directions"]) {
      if (!e.is_array() || e.size() != 2) throw LotError(ErrorCode::InvalidInstance, "directions entries must be [[r,c],[r,c]]");
      L.directions.push_back({{e[0][0].get<int>(), e[0][1].get<int>()}, {e[1][0].get<int>(), e[1][1].get<int>()}});
    }
  }
  for (auto* v : {&L.park0, &L.park90, &L.drive}) std::sort(v->begin(), v->end());
  std::sort(L.directions.begin(), L.directions.end());
  L.stall_count = j.value("stall_count", int(L.park0.size() + L.park90.size()));
  return L;
}

json result_to_json(const SolveResult& r, const FormulationKind& kind) {
  json j;
  j["status"] = to_string(r.status);
  j["mode"] = to_string(kind.mode);
  j["formulation"] = to_string(kind.variant);
  j["turn"] = to_string(kind.turn);
  j["multi_entrance"] = to_string(kind.multi);
  j["lb"] = r.lower_bound ? json(*r.lower_bound) : json(nullptr);
  j["ub"] = r.upper_bound ? json(*r.upper_bound) : json(nullptr);
  j["gap"] = r.gap ? json(*r.gap) : json(nullptr);
  j["time_s"] = r.stats.wall_time_s;
  j["cuts"] = r.stats.user_cuts;
  j["layout"] = r.layout ? layout_to_json(*r.layout) : json(nullptr);
  json s;
  s["build_time_s"] = r.stats.build_time_s;
  s["cut_rounds"] = r.stats.cut_rounds;
  s["backend_nodes"] = r.stats.backend_nodes;
  s["lazy_rows_added"] = r.stats.lazy_rows_added;
  s["rejected_incumbents"] = r.stats.rejected_incumbents;
  s["variables"] = r.stats.num_variables;
  s["constraints"] = r.stats.num_constraints;
  s["lazy_constraints"] = r.stats.num_lazy_constraints;
  s["constraint_counts"] = r.stats.constraint_counts;
  j["stats"] = s;
  return j;
}

json round_to_json(const RoundRecord& rec) {
  json j;
  j["round"] = rec.round;
  j["cuts"] = rec.cuts_added;
  j["lb"] = rec.lb ? json(*rec.lb) : json(nullptr);
  j["ub"] = rec.ub ? json(*rec.ub) : json(nullptr);
  j["elapsed_s"] = rec.elapsed_s;
  return j;
}

RenderFormat parse_format(const std::string& s) {
  if (s == "ascii" || s == "text") return RenderFormat::Ascii;
  if (s == "svg") return RenderFormat::Svg;
  throw LotError(ErrorCode::UnknownFormat, "unknown render format '" + s + "'");
}

namespace {

// one legend letter per cell
std::vector<std::string> paint(const Layout& L, const Instance& inst) {
  const GridSpec& g = inst.grid;
  AnchorSets A(g, inst.params);
  std::vector<std::string> rows(size_t(g.mu), std::string(size_t(g.nu), '.'));
  auto put = [&](Cell c, char ch) {
    if (g.in_range(c)) rows[size_t(c.row)][size_t(c.col)] = ch;
  };
  auto fill = [&](FieldKind k, const std::vector<Cell>& anchors, char ch) {
    for (Cell a : anchors)
      for (Cell c : A.footprint(k, a)) put(c, ch);
  };
  fill(FieldKind::Drive, L.drive, 'D');
  fill(FieldKind::Park0, L.park0, 'G');
  fill(FieldKind::Park90, L.park90, 'B');
  for (Cell c : g.entrances) put(c, 'E');
  for (Cell c : g.exits) put(c, 'X');
  for (Cell c : g.blocked) put(c, '#');
  return rows;
}

}  // namespace

std::string render_ascii(const Layout& L, const Instance& inst, const RenderStyle& style) {
  if (style.show_directions && inst.grid.mode != Mode::OneWay)
    throw LotError(ErrorCode::UnknownFormat, "direction map needs a one-way layout");
  std::ostringstream os;
  for (auto& r : paint(L, inst)) os << r << "\n";
  if (style.show_directions) {
    const GridSpec& g = inst.grid;
    std::vector<std::string> rows(size_t(g.mu), std::string(size_t(g.nu), '.'));
    for (Cell c : g.blocked) rows[size_t(c.row)][size_t(c.col)] = '#';
    std::vector<int> outs(size_t(g.size()), 0);
    for (Cell c : L.drive) rows[size_t(c.row)][size_t(c.col)] = 'o';
    for (auto [a, b] : L.directions) {
      if (style.flip_arrows) std::swap(a, b);
      if (!g.in_range(a)) continue;
      char ch = b.col > a.col ? '>' : b.col < a.col ? '<' : b.row < a.row ? '^' : 'v';
      char& slot = rows[size_t(a.row)][size_t(a.col)];
      slot = ++outs[size_t(g.index(a))] > 1 ? '+' : ch;
    }
    os << "\n";
    for (auto& r : rows) os << r << "\n";
  }
  return os.str();
}

std::string render_svg(const Layout& L, const Instance& inst, const RenderStyle& style) {
  const GridSpec& g = inst.grid;
  const int s = 24;
  auto rows = paint(L, inst);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << g.nu * s << "\" height=\"" << g.mu * s << "\">\n";
  for (int r = 0; r < g.mu; ++r) {
    for (int c = 0; c < g.nu; ++c) {
      const char* fill = "#ffffff";
      switch (rows[size_t(r)][size_t(c)]) {
        case '#': fill = "#d62728"; break;
        case 'G': fill = "#2ca02c"; break;
        case 'B': fill = "#1f77b4"; break;
        case 'D': fill = "#9e9e9e"; break;
        case 'E':
        case 'X': fill = "#8e44ad"; break;
      }
      os << "<rect x=\"" << c * s << "\" y=\"" << r * s << "\" width=\"" << s << "\" height=\"" << s << "\" fill=\""
         << fill << "\" stroke=\"#333\" stroke-width=\"0.5\"/>\n";
    }
  }
  if (style.show_directions) {
    for (auto [a, b] : L.directions) {
      if (style.flip_arrows) std::swap(a, b);
      double x1 = (a.col + 0.5) * s, y1 = (a.row + 0.5) * s, x2 = (b.col + 0.5) * s, y2 = (b.row + 0.5) * s;
      os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << 0.3 * x1 + 0.7 * x2 << "\" y2=\""
         << 0.3 * y1 + 0.7 * y2 << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
      os << "<circle cx=\"" << 0.3 * x1 + 0.7 * x2 << "\" cy=\"" << 0.3 * y1 + 0.7 * y2
         << "\" r=\"2.5\" fill=\"#000\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render(const Layout& L, const Instance& inst, const RenderStyle& style) {
  return style.format == RenderFormat::Svg ? render_svg(L, inst, style) : render_ascii(L, inst, style);
}

std::string bench_csv(const BenchTable& t) {
  std::ostringstream os;
  os << std::setprecision(6);
  auto opt = [&](auto v) {
    std::ostringstream o;
    o << std::setprecision(6);
    if (v) o << *v;
    return o.str();
  };
  auto kind_str = [](const FormulationKind& k) { return std::string(to_string(k.mode)) + "," + to_string(k.variant); };
  os << "row,instance,mode,formulation,group,status,LB,UB,Gap,Time,Cuts,Instances,Optimal,MedianTime,AvgTime,AvgGap,"
        "MedianGap\n";
  for (const auto& r : t.rows) {
    os << "instance," << r.instance << "," << kind_str(r.kind) << "," << (r.group == 1 ? "I" : "II") << ","
       << to_string(r.status) << "," << opt(r.lb) << "," << opt(r.ub) << "," << opt(r.gap) << "," << r.time_s << ","
       << r.cuts << ",,,,,,\n";
  }
  for (const auto& s : t.summaries) {
    const char* group = s.group == 0 ? "all" : s.group == 1 ? "I" : "II";
    os << "summary,," << kind_str(s.kind) << "," << group << ",,,,,,," << s.instances << "," << s.optimal << ","
       << s.median_time_s << "," << s.mean_time_s << "," << opt(s.mean_gap) << "," << opt(s.median_gap) << "\n";
  }
  return os.str();
}

GeoPolygon parse_geojson(const json& j) {
  auto fail = [](const std::string& m) -> GeoPolygon { throw LotError(ErrorCode::DegeneratePolygon, m); };
  if (!j.is_object() || !j.contains("type")) return fail("not a GeoJSON object");
  std::string type = j["type"].get<std::string>();
  if (type == "FeatureCollection") {
    for (const json& f : j["features"]) {
      try {
        return parse_geojson(f);
      } catch (const LotError&) {
      }
    }
    return fail("no polygon in feature collection");
  }
  if (type == "Feature") return parse_geojson(j["geometry"]);
  auto rings = [&](const json& coords) {
    GeoPolygon poly;
    for (const json& ring : coords) {
      std::vector<LonLat> pts;
      for (const json& p : ring) pts.push_back({p[0].get<double>(), p[1].get<double>()});
      // GeoJSON rings repeat the first vertex
      if (pts.size() > 1 && pts.front().lon == pts.back().lon && pts.front().lat == pts.back().lat) pts.pop_back();
      poly.push_back(pts);
    }
    return poly;
  };
  if (type == "Polygon") return rings(j["coordinates"]);
  if (type == "MultiPolygon" && !j["coordinates"].empty()) return rings(j["coordinates"][0]);
  return fail("unsupported geometry type " + type);
}

Instance generate_instance(const GenOptions& o) {
  if (o.rows <= 0 || o.cols <= 0) throw LotError(ErrorCode::InvalidInstance, "grid dimensions must be positive");
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  FieldParams params = o.params;
  if (o.mode == Mode::OneWay && !o.keep_delta) params.delta = 1;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Instance inst;
    inst.params = params;
    GridSpec& g = inst.grid;
    g.mu = o.rows;
    g.nu = o.cols;
    g.mode = o.mode;
    for (int r = 0; r < g.mu; ++r)
      for (int c = 0; c < g.nu; ++c)
        if (unit(rng) < o.blocked_rate) g.blocked.push_back({r, c});
    AnchorSets A(g, params);
    const int d = params.delta;
    // boundary anchors of the largest drive region that reaches the boundary
    DriveGraph G(A, g);
    int ncomp = 0;
    std::vector<int> comp = components(G, std::vector<uint8_t>(size_t(G.num_nodes()), 1), &ncomp);
    std::vector<int> size(size_t(ncomp), 0);
    for (int c : comp) ++size[size_t(c)];
    auto on_edge = [&](Cell a) { return a.row == 0 || a.col == 0 || a.row + d == g.mu || a.col + d == g.nu; };
    int best = -1;
    for (int u = 0; u < G.num_nodes(); ++u)
      if (on_edge(G.cell(u)) && (best < 0 || size[size_t(comp[size_t(u)])] > size[size_t(best)])) best = comp[size_t(u)];
    std::vector<Cell> boundary;
    for (int u = 0; u < G.num_nodes(); ++u)
      if (on_edge(G.cell(u)) && comp[size_t(u)] == best) boundary.push_back(G.cell(u));
    if (boundary.empty()) continue;
    Cell ent = boundary[size_t(rng() % boundary.size())];
    g.entrances = {ent};
    if (o.mode == Mode::OneWay) {
      std::vector<Cell> next, edge;
      for (int k = 0; k < 4; ++k) {
        Cell c{ent.row + kDirRow[size_t(k)], ent.col + kDirCol[size_t(k)]};
        if (!A.valid(FieldKind::Drive, c)) continue;
        next.push_back(c);
        if (on_edge(c)) edge.push_back(c);
      }
      auto& pool = edge.empty() ? next : edge;
      if (pool.empty()) continue;
      g.exits = {pool[size_t(rng() % pool.size())]};
    }
    canonicalize(g);
    validate_instance(g, params);
    return inst;
  }
  throw LotError(ErrorCode::InvalidInstance, "could not place an entrance after 1000 draws");
}

}  // namespace lotforge
