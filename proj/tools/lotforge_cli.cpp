#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lotforge/engine.hpp"
#include "lotforge/error.hpp"
#include "lotforge/io.hpp"
#include "lotforge/oracle.hpp"
#include "lotforge/raster.hpp"

using namespace lotforge;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kInfeasible = 2, kInput = 3, kNoSolution = 4 };

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LotError(ErrorCode::InvalidInstance, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw LotError(ErrorCode::InvalidInstance, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw LotError(ErrorCode::InvalidInstance, "cannot write " + path);
  out << text;
}

// accepts a bare layout or a solve result holding one
Layout read_layout(const std::string& path) {
  json j = read_json(path);
  if (j.contains("layout")) {
    if (j["layout"].is_null()) throw LotError(ErrorCode::InvalidInstance, path + " holds no layout");
    return layout_from_json(j["layout"]);
  }
  return layout_from_json(j);
}

Cell parse_cell(const std::string& s) {
  int r = 0, c = 0;
  char comma = 0;
  std::istringstream is(s);
  if (!(is >> r >> comma >> c) || comma != ',') throw LotError(ErrorCode::InvalidInstance, "expected row,col: " + s);
  return {r, c};
}

struct SolveArgs {
  std::string instance, mode, formulation = "bnc", turn = "off", multi = "single", out, log, backend;
  double time_limit = 900;
  bool outer_loop = false;
  bool verbose = false;
};

int cmd_solve(const SolveArgs& a) {
  Instance inst = load_instance(a.instance);
  FormulationKind kind;
  kind.mode = a.mode.empty() ? inst.grid.mode : parse_mode(a.mode);
  kind.variant = parse_variant(a.formulation);
  kind.turn = parse_turn(a.turn);
  kind.multi = parse_multi(a.multi);
  inst.grid.mode = kind.mode;
  SolveOptions so;
  so.time_limit_s = a.time_limit;
  so.backend = a.backend;
  so.force_outer_loop = a.outer_loop;
  so.verbose = a.verbose;
  std::ofstream logfile;
  if (!a.log.empty()) {
    logfile.open(a.log);
    so.on_round = [&](const RoundRecord& r) { logfile << round_to_json(r).dump() << "\n"; };
  }
  SolveResult r = solve_instance(inst, kind, so);
  write_text(a.out, result_to_json(r, kind).dump(2) + "\n");
  if (r.status == SolveStatus::Infeasible) return kInfeasible;
  if (!r.layout) return kNoSolution;
  return kOk;
}

int cmd_render(const std::string& layout_path, const std::string& instance_path, const std::string& format,
               bool dirs, bool flip, const std::string& out) {
  RenderStyle st;
  st.format = parse_format(format);
  st.show_directions = dirs;
  st.flip_arrows = flip;
  Instance inst = load_instance(instance_path);
  Layout L = read_layout(layout_path);
  if (dirs && L.directions.empty() && inst.grid.mode != Mode::OneWay)
    throw LotError(ErrorCode::UnknownFormat, "--show-directions needs a one-way layout");
  write_text(out, render(L, inst, st));
  return kOk;
}

int cmd_oracle(const std::string& instance_path, const std::string& mode) {
  Instance inst = load_instance(instance_path);
  Mode m = mode.empty() ? inst.grid.mode : parse_mode(mode);
  OracleResult o = m == Mode::TwoWay ? brute_force_two_way(inst.grid, inst.params)
                                     : brute_force_one_way(inst.grid, inst.params);
  json j;
  j["feasible"] = o.feasible;
  j["optimum"] = o.optimum;
  j["explored"] = o.explored;
  j["witness"] = layout_to_json(o.witness);
  std::cout << j.dump(2) << "\n";
  return o.feasible ? kOk : kInfeasible;
}

int cmd_validate(const std::string& instance_path, const std::string& layout_path, const std::string& mode,
                 const std::string& turn, const std::string& multi) {
  Instance inst = load_instance(instance_path);
  Layout L = read_layout(layout_path);
  Mode m = mode.empty() ? inst.grid.mode : parse_mode(mode);
  auto rep = validate_layout(L, inst, m, parse_multi(multi), parse_turn(turn));
  json j;
  j["valid"] = rep.ok();
  j["violations"] = rep.violations;
  std::cout << j.dump(2) << "\n";
  return rep.ok() ? kOk : kInvalid;
}

int cmd_bench(const std::string& manifest_path, double budget, int workers, const std::string& out,
              const std::string& backend) {
  json m = read_json(manifest_path);
  auto base = std::filesystem::path(manifest_path).parent_path();
  std::vector<std::pair<std::string, Instance>> instances;
  for (const json& p : m.at("instances")) {
    std::filesystem::path path = p.get<std::string>();
    if (path.is_relative()) path = base / path;
    instances.push_back({path.stem().string(), load_instance(path.string())});
  }
  std::vector<FormulationKind> kinds;
  if (m.contains("kinds")) {
    for (const json& k : m["kinds"]) {
      FormulationKind fk;
      fk.mode = parse_mode(k.value("mode", "two-way"));
      fk.variant = parse_variant(k.value("formulation", "bnc"));
      fk.turn = parse_turn(k.value("turn", "off"));
      fk.multi = parse_multi(k.value("multi_entrance", "single"));
      kinds.push_back(fk);
    }
  } else {
    for (Mode md : {Mode::TwoWay, Mode::OneWay})
      for (Variant v : {Variant::FlowBased, Variant::FlowWithVIs, Variant::CutBased}) kinds.push_back({v, md});
  }
  // the manifest instance mode is overridden per kind; one-way kinds need instances with exits
  SolveOptions so;
  so.time_limit_s = budget;
  so.backend = backend;
  BenchTable t = compare_formulations(instances, kinds, so, workers);
  write_text(out, bench_csv(t));
  return kOk;
}

int cmd_gen(const GenOptions& g, const std::string& out) {
  write_text(out, instance_to_json(generate_instance(g)).dump() + "\n");
  return kOk;
}

int cmd_rasterize(const std::string& path, double cell, double rotation, double overlap,
                  const std::vector<std::string>& entrances, const std::vector<std::string>& exits,
                  const std::string& mode, const std::string& out) {
  if (!(cell > 0)) throw LotError(ErrorCode::CellSizeNonPositive, "cell size must be positive");
  GeoPolygon poly = parse_geojson(read_json(path));
  Instance inst;
  inst.grid = rasterize_polygon(poly, cell, {rotation, overlap});
  inst.grid.mode = parse_mode(mode);
  if (inst.grid.mode == Mode::OneWay) inst.params.delta = 1;
  for (auto& e : entrances) inst.grid.entrances.push_back(parse_cell(e));
  for (auto& e : exits) inst.grid.exits.push_back(parse_cell(e));
  canonicalize(inst.grid);
  if (!inst.grid.entrances.empty()) compute_anchor_sets(inst.grid, inst.params);
  json j = instance_to_json(inst);
  int total = inst.grid.size();
  std::cerr << inst.grid.mu << "x" << inst.grid.nu << " grid, " << inst.grid.blocked.size() << " blocked ("
            << (total ? 100.0 * double(inst.grid.blocked.size()) / total : 0.0) << "%)\n";
  write_text(out, j.dump() + "\n");
  return kOk;
}

int cmd_stats(const std::string& instance_path, const std::string& mode) {
  Instance inst = load_instance(instance_path);
  if (!mode.empty()) inst.grid.mode = parse_mode(mode);
  json j;
  AnchorSets A = compute_anchor_sets(inst.grid, inst.params);
  j["P0"] = A.p0().size();
  j["P90"] = A.p90().size();
  j["D"] = A.d().size();
  for (Variant v : {Variant::FlowBased, Variant::FlowWithVIs, Variant::CutBased}) {
    Formulation F = build_formulation(inst, {v, inst.grid.mode});
    json f;
    f["arcs"] = F.graph.num_arcs();
    f["variables"] = F.model.num_variables();
    f["constraints"] = F.model.constraints().size();
    json tags;
    for (auto [tag, n] : F.model.tag_counts()) tags[to_string(tag)] = n;
    f["by_tag"] = tags;
    j[to_string(v)] = f;
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parking lot layout optimizer"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("instance", sa.instance)->required();
  solve->add_option("--mode", sa.mode, "two-way | one-way (default: from the instance)");
  solve->add_option("--formulation", sa.formulation, "flow | flow-vi | bnc");
  solve->add_option("--time-limit", sa.time_limit, "seconds");
  solve->add_option("--turn", sa.turn, "off | uniform | no_sharp | no_opposite_overlap | min_segment");
  solve->add_option("--multi-entrance", sa.multi, "single | connected | disjoint");
  solve->add_option("--out", sa.out, "result JSON path (default stdout)");
  solve->add_option("--log", sa.log, "per-round records, one JSON object per line");
  solve->add_option("--backend", sa.backend);
  solve->add_flag("--outer-loop", sa.outer_loop, "separate between full re-solves instead of in the tree");
  solve->add_flag("-v,--verbose", sa.verbose);

  std::string layout, instance, format = "ascii", out, mode, turn = "off", multi = "single", backend;
  bool dirs = false, flip = false;
  auto* rend = app.add_subcommand("render", "draw a layout");
  rend->add_option("layout", layout)->required();
  rend->add_option("--instance", instance)->required();
  rend->add_option("--format", format, "ascii | svg");
  rend->add_flag("--show-directions", dirs);
  rend->add_flag("--flip-arrows", flip);
  rend->add_option("--out", out);

  auto* orc = app.add_subcommand("oracle", "exhaustive optimum for a small instance");
  orc->add_option("instance", instance)->required();
  orc->add_option("--mode", mode);

  auto* val = app.add_subcommand("validate", "check a layout against an instance");
  val->add_option("instance", instance)->required();
  val->add_option("layout", layout)->required();
  val->add_option("--mode", mode);
  val->add_option("--turn", turn);
  val->add_option("--multi-entrance", multi);

  std::string manifest;
  double budget = 900;
  int workers = 1;
  auto* bench = app.add_subcommand("bench", "compare formulations over a manifest");
  bench->add_option("manifest", manifest)->required();
  bench->add_option("--budget", budget, "seconds per solve");
  bench->add_option("--workers", workers);
  bench->add_option("--out", out, "CSV path (default stdout)");
  bench->add_option("--backend", backend);

  GenOptions go;
  std::string gen_mode = "two-way";
  auto* gen = app.add_subcommand("gen", "random synthetic instance");
  gen->add_option("--rows", go.rows);
  gen->add_option("--cols", go.cols);
  gen->add_option("--blocked", go.blocked_rate, "fraction of blocked cells");
  gen->add_option("--mode", gen_mode);
  gen->add_option("--seed", go.seed);
  gen->add_option("--out", out);

  std::string geo;
  double cell = 3, rotation = 0, overlap = 0;
  std::vector<std::string> ents, exs;
  std::string rmode = "two-way";
  auto* ras = app.add_subcommand("rasterize", "GeoJSON polygon to instance");
  ras->add_option("geojson", geo)->required();
  ras->add_option("--cell-size", cell, "metres");
  ras->add_option("--rotation", rotation, "degrees");
  ras->add_option("--min-overlap", overlap, "fraction of a cell that must lie inside the lot");
  ras->add_option("--entrance", ents, "row,col");
  ras->add_option("--exit", exs, "row,col");
  ras->add_option("--mode", rmode);
  ras->add_option("--out", out);

  auto* st = app.add_subcommand("stats", "index set and model sizes");
  st->add_option("instance", instance)->required();
  st->add_option("--mode", mode);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(sa);
    if (*rend) return cmd_render(layout, instance, format, dirs, flip, out);
    if (*orc) return cmd_oracle(instance, mode);
    if (*val) return cmd_validate(instance, layout, mode, turn, multi);
    if (*bench) return cmd_bench(manifest, budget, workers, out, backend);
    if (*gen) {
      go.mode = parse_mode(gen_mode);
      return cmd_gen(go, out);
    }
    if (*ras) return cmd_rasterize(geo, cell, rotation, overlap, ents, exs, rmode, out);
    if (*st) return cmd_stats(instance, mode);
  } catch (const LotError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::Internal || e.code() == ErrorCode::NonIntegralAssignment) return kInvalid;
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
