#include "lotforge/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "lotforge/error.hpp"
#include "lotforge/heuristic.hpp"

namespace lotforge {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Feasible: return "Feasible";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::TimeLimit: return "TimeLimit";
  }
  return "?";
}

std::optional<double> relative_gap(std::optional<int> lb, std::optional<double> ub) {
  if (!lb || !ub) return std::nullopt;
  double diff = std::max(0.0, *ub - double(*lb));
  if (diff <= 1e-5) return 0.0;
  if (*lb == 0) return std::nullopt;
  return diff / double(*lb);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string cs(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

bool contains(const std::vector<Cell>& sorted, Cell c) { return std::binary_search(sorted.begin(), sorted.end(), c); }

}  // namespace

std::vector<double> assignment_from_layout(const Formulation& form, const Layout& layout) {
  std::vector<double> x(size_t(form.model.num_variables()), 0.0);
  const auto& grid = form.instance.grid;
  auto set_cell = [&](const std::vector<int>& idx, Cell c) {
    if (!grid.in_range(c)) return;
    int v = idx[size_t(grid.index(c))];
    if (v >= 0) x[size_t(v)] = 1;
  };
  for (Cell c : layout.park0) set_cell(form.vars.x0, c);
  for (Cell c : layout.park90) set_cell(form.vars.x90, c);
  for (Cell c : layout.drive) set_cell(form.vars.y, c);
  if (!form.vars.z.empty()) {
    for (auto& [a, b] : layout.directions) {
      int u = form.graph.node(a), v = form.graph.node(b);
      if (u < 0 || v < 0) continue;
      int arc = form.graph.arc_between(u, v);
      if (arc >= 0) x[size_t(form.vars.z[size_t(arc)])] = 1;
    }
  }
  return x;
}

ValidationReport validate_layout(const Layout& layout, const Instance& instance, Mode mode, MultiEntrance multi,
                                 TurnOption turn) {
  ValidationReport rep;
  auto bad = [&](const std::string& s) { rep.violations.push_back(s); };
  GridSpec grid = instance.grid;
  grid.mode = mode;
  if (mode == Mode::TwoWay) grid.exits.clear();
  canonicalize(grid);
  AnchorSets anchors;
  try {
    anchors = compute_anchor_sets(grid, instance.params);
  } catch (const LotError& e) {
    bad(std::string("instance: ") + e.what());
    return rep;
  }
  DriveGraph g = build_drive_graph(anchors, grid);

  Layout L = layout;
  for (auto* v : {&L.park0, &L.park90, &L.drive}) std::sort(v->begin(), v->end());
  std::sort(L.directions.begin(), L.directions.end());
  if (L.stall_count != int(L.park0.size() + L.park90.size())) bad("stall_count does not match parking fields");

  // (a) footprints in range and off blocked cells
  bool footprints_ok = true;
  auto check_anchor = [&](FieldKind k, const std::vector<Cell>& cells, const char* what) {
    for (Cell c : cells)
      if (!anchors.valid(k, c)) {
        bad(std::string(what) + " field at " + cs(c) + " leaves the grid or covers a blocked cell");
        footprints_ok = false;
      }
  };
  check_anchor(FieldKind::Park0, L.park0, "0-degree parking");
  check_anchor(FieldKind::Park90, L.park90, "90-degree parking");
  check_anchor(FieldKind::Drive, L.drive, "drive");
  if (!footprints_ok) return rep;

  // (b) single purpose
  std::vector<int> use(size_t(grid.size()), 0);  // 1 drive, 2 parking
  for (Cell a : L.drive)
    for (Cell c : anchors.footprint(FieldKind::Drive, a)) use[size_t(grid.index(c))] = 1;
  for (FieldKind k : {FieldKind::Park0, FieldKind::Park90}) {
    for (Cell a : (k == FieldKind::Park0 ? L.park0 : L.park90)) {
      for (Cell c : anchors.footprint(k, a)) {
        int& u = use[size_t(grid.index(c))];
        if (u != 0) bad("cell " + cs(c) + " has more than one purpose");
        u = 2;
      }
    }
  }

  // (c) accessibility
  for (FieldKind k : {FieldKind::Park0, FieldKind::Park90}) {
    for (Cell a : (k == FieldKind::Park0 ? L.park0 : L.park90)) {
      bool ok = false;
      for (Cell d : anchors.access(k, a)) ok = ok || contains(L.drive, d);
      if (!ok) bad("parking field at " + cs(a) + " has no adjacent active drive field");
    }
  }

  for (const auto* v : {&grid.entrances, &grid.exits, &grid.existing_drive})
    for (Cell c : *v)
      if (!contains(L.drive, c)) bad("required drive field at " + cs(c) + " is inactive");

  std::vector<uint8_t> active(size_t(g.num_nodes()), 0);
  for (Cell c : L.drive) active[size_t(g.node(c))] = 1;
  std::vector<int> roots, sources;
  for (Cell c : grid.entrances) roots.push_back(g.node(c));
  for (Cell c : grid.exits) sources.push_back(g.node(c));
  if (multi != MultiEntrance::Disjoint) {
    if (!roots.empty()) roots.resize(1);
    if (!sources.empty()) sources.resize(1);
  }

  if (mode == Mode::TwoWay) {
    // (d) connectivity
    if (!L.directions.empty()) bad("two-way layout carries direction arcs");
    int ncomp = 0;
    auto comp = components(g, active, &ncomp);
    std::vector<uint8_t> rooted(size_t(ncomp), 0);
    for (int r : roots)
      if (comp[size_t(r)] >= 0) rooted[size_t(comp[size_t(r)])] = 1;
    for (int v = 0; v < g.num_nodes(); ++v)
      if (active[size_t(v)] && !rooted[size_t(comp[size_t(v)])])
        bad("drive field at " + cs(g.cell(v)) + " is not connected to an entrance");
  } else {
    // (e) directions
    std::vector<uint8_t> z(size_t(g.num_arcs()), 0);
    std::vector<int> outdeg(size_t(g.num_nodes()), 0), indeg(size_t(g.num_nodes()), 0);
    for (auto& [a, b] : L.directions) {
      int u = g.node(a), v = g.node(b);
      int arc = (u >= 0 && v >= 0) ? g.arc_between(u, v) : -1;
      if (arc < 0) {
        bad("direction " + cs(a) + "->" + cs(b) + " is not an arc of the drive graph");
        continue;
      }
      if (!active[size_t(u)] || !active[size_t(v)])
        bad("direction " + cs(a) + "->" + cs(b) + " touches an inactive drive field");
      z[size_t(arc)] = 1;
      ++outdeg[size_t(u)];
      ++indeg[size_t(v)];
    }
    for (int a = 0; a < g.num_arcs(); ++a) {
      int r = g.reverse(a);
      if (r > a && z[size_t(a)] && z[size_t(r)])
        bad("anti-parallel directions between " + cs(g.tail_cell(a)) + " and " + cs(g.head_cell(a)));
    }
    auto walk = [&](const std::vector<int>& seeds, bool toward) {
      std::vector<uint8_t> seen(size_t(g.num_nodes()), 0);
      std::vector<int> st;
      for (int s : seeds) seen[size_t(s)] = 1, st.push_back(s);
      while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        for (int a : (toward ? g.in_arcs(u) : g.out_arcs(u))) {
          int v = toward ? g.arc(a).tail : g.arc(a).head;
          if (z[size_t(a)] && !seen[size_t(v)]) seen[size_t(v)] = 1, st.push_back(v);
        }
      }
      return seen;
    };
    auto to_root = walk(roots, true);
    auto from_exit = walk(sources, false);
    std::vector<uint8_t> is_root(size_t(g.num_nodes()), 0), is_src(size_t(g.num_nodes()), 0);
    for (int r : roots) is_root[size_t(r)] = 1;
    for (int s : sources) is_src[size_t(s)] = 1;
    for (int v = 0; v < g.num_nodes(); ++v) {
      if (!active[size_t(v)]) continue;
      if (!to_root[size_t(v)]) bad("drive field at " + cs(g.cell(v)) + " has no directed path to an entrance");
      if (!from_exit[size_t(v)]) bad("drive field at " + cs(g.cell(v)) + " is not reachable from an exit");
      if (!is_root[size_t(v)] && outdeg[size_t(v)] == 0) bad("dead end at " + cs(g.cell(v)) + " (no outgoing arc)");
      if (!is_src[size_t(v)] && indeg[size_t(v)] == 0) bad("dead end at " + cs(g.cell(v)) + " (no incoming arc)");
    }
  }

  // (f) turn restrictions, replayed on the emitted rows
  if (turn != TurnOption::Off) {
    FormulationKind k{Variant::CutBased, mode, turn, multi};
    FormulationOptions fo;
    fo.hop.forward = fo.hop.reverse = false;
    Instance inst{grid, instance.params};
    Formulation F = build_formulation(inst, k, fo);
    auto x = assignment_from_layout(F, L);
    for (const auto& row : F.model.constraints())
      if (row.tag == Tag::Turn && row.violated(x)) bad("turn restriction violated");
  }
  return rep;
}

namespace {

void fill_model_stats(const Formulation& F, SolveStats& s) {
  s.num_variables = F.model.num_variables();
  s.num_constraints = int(F.model.constraints().size());
  for (const auto& c : F.model.constraints()) s.num_lazy_constraints += c.lazy;
  for (auto [tag, n] : F.model.tag_counts()) s.constraint_counts[to_string(tag)] = n;
}

}  // namespace

SolveResult solve_formulation(const Formulation& F, const SolveOptions& opts) {
  if (!(opts.time_limit_s > 0)) throw LotError(ErrorCode::BudgetNonPositive, "time limit must be positive");
  auto t0 = Clock::now();
  SolveResult R;
  fill_model_stats(F, R.stats);
  auto backend = make_backend(opts.backend);
  BackendOptions bo;
  bo.time_limit_s = opts.time_limit_s;
  bo.seed = opts.seed;
  bo.verbose = opts.verbose;
  bo.backend_cuts = opts.backend_cuts;

  const bool cut_based = F.kind.variant == Variant::CutBased;
  auto separate = [&](const std::vector<double>& x) {
    return F.kind.mode == Mode::TwoWay ? separate_two_way(F, x, opts.separation, &R.stats.separation)
                                       : separate_one_way(F, x, opts.separation, &R.stats.separation);
  };
  auto log_round = [&](int round, size_t cuts, std::optional<int> lb, std::optional<double> ub) {
    if (!opts.on_round) return;
    RoundRecord rec;
    rec.round = round;
    rec.cuts_added = int(cuts);
    rec.lb = lb;
    rec.ub = ub;
    rec.elapsed_s = seconds_since(t0);
    opts.on_round(rec);
  };

  BackendResult br;
  std::optional<int> lb;
  std::optional<double> ub;
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<double> best;

  // rounded layouts are checked by separation too, since the backend takes them without
  // asking the incumbent callback
  std::vector<double> heur_best;
  double heur_obj = -1;
  HeuristicCallback heur;
  if (opts.heuristic)
    heur = [&](const std::vector<double>& lp, const SearchState&) -> std::optional<std::vector<double>> {
      auto x = round_to_layout(F, lp);
      if (!x) return std::nullopt;
      if (cut_based && !(F.kind.mode == Mode::TwoWay ? separate_two_way(F, *x, opts.separation, nullptr)
                                                     : separate_one_way(F, *x, opts.separation, nullptr))
                            .empty())
        return std::nullopt;
      double obj = F.model.objective(*x);
      if (obj > heur_obj) heur_obj = obj, heur_best = *x;
      return x;
    };

  auto map_single = [&](const BackendResult& b) {
    if (b.status == BackendStatus::Optimal || b.status == BackendStatus::Feasible) {
      best = b.x;
      lb = int(std::llround(b.objective));
    }
    if (std::isfinite(b.bound) && b.status != BackendStatus::Infeasible)
      ub = std::floor(b.bound + 1e-5);
    switch (b.status) {
      case BackendStatus::Optimal: status = SolveStatus::Optimal; break;
      case BackendStatus::Feasible:
      case BackendStatus::NoSolution: status = SolveStatus::TimeLimit; break;
      case BackendStatus::Infeasible: status = SolveStatus::Infeasible; break;
      case BackendStatus::Error: throw LotError(ErrorCode::Internal, "backend error");
    }
    R.stats.backend_nodes += b.stats.nodes;
    R.stats.lazy_rows_added += b.stats.lazy_rows_added;
    R.stats.rejected_incumbents += b.stats.rejected_candidates;
    R.stats.heuristic_calls += b.stats.heuristic_calls;
    R.stats.heuristic_solutions += b.stats.heuristic_solutions;
  };

  if (!cut_based) {
    map_single(backend->solve(F.model, bo, {}, heur));
  } else if (backend->supports_lazy() && !opts.force_outer_loop) {
    int round = 0;
    IncumbentCallback cb = [&](const std::vector<double>& x, const SearchState& state) {
      auto cuts = separate(x);
      if (!cuts.empty()) {
        ++round;
        for (const auto& c : cuts) R.cut_log.push_back({c, x});
        std::optional<int> inc;
        if (state.incumbent) inc = int(std::llround(*state.incumbent));
        log_round(round, cuts.size(), inc, std::isfinite(state.bound) ? std::optional<double>(state.bound) : std::nullopt);
      }
      return cuts;
    };
    map_single(backend->solve(F.model, bo, cb, heur));
    R.stats.cut_rounds = round;
  } else {
    ModelIR M = F.model;
    bo.native_lazy = false;
    double best_ub = std::numeric_limits<double>::infinity();
    status = SolveStatus::TimeLimit;
    for (int round = 1;; ++round) {
      double remaining = opts.time_limit_s - seconds_since(t0);
      if (remaining <= 0) break;
      bo.time_limit_s = remaining;
      BackendResult b = backend->solve(M, bo, {}, heur);
      R.stats.backend_nodes += b.stats.nodes;
      R.stats.heuristic_calls += b.stats.heuristic_calls;
      R.stats.heuristic_solutions += b.stats.heuristic_solutions;
      if (b.status == BackendStatus::Infeasible) {
        // cuts are valid, so an infeasible relaxation means no layout exists
        if (!lb) status = SolveStatus::Infeasible;
        break;
      }
      if (b.status == BackendStatus::NoSolution || b.status == BackendStatus::Error) break;
      if (std::isfinite(b.bound)) best_ub = std::min(best_ub, std::floor(b.bound + 1e-5));
      auto cuts = separate(b.x);
      R.stats.ub_trace.push_back(best_ub);
      if (cuts.empty()) {
        int obj = int(std::llround(b.objective));
        if (!lb || obj > *lb) {
          lb = obj;
          best = b.x;
        }
        R.stats.lb_trace.push_back(*lb);
        log_round(round, 0, lb, best_ub);
        if (b.status == BackendStatus::Optimal) status = SolveStatus::Optimal;
        break;
      }
      R.stats.lb_trace.push_back(lb ? *lb : 0);
      for (auto c : cuts) {
        R.cut_log.push_back({c, b.x});
        c.lazy = false;
        M.add(std::move(c));
      }
      R.stats.cut_rounds = round;
      log_round(round, cuts.size(), lb, best_ub);
    }
    if (std::isfinite(best_ub)) ub = best_ub;
  }
  for (const auto& [c, x] : R.cut_log) (void)x, ++R.stats.user_cuts;
  if (!heur_best.empty() && (!lb || int(std::llround(heur_obj)) > *lb)) {
    lb = int(std::llround(heur_obj));
    best = heur_best;
  }

  if (status == SolveStatus::Optimal && lb) ub = double(*lb);
  if (!best.empty()) {
    R.assignment = best;
    Layout L = extract_layout(F.model, best);
    auto rep = validate_layout(L, F.instance, F.kind.mode, F.kind.multi, F.kind.turn);
    if (!rep.ok()) {
      std::ostringstream os;
      os << "solver layout failed validation:";
      for (auto& v : rep.violations) os << " [" << v << "]";
      throw LotError(ErrorCode::Internal, os.str());
    }
    R.layout = std::move(L);
  }
  R.status = status;
  R.lower_bound = lb;
  R.upper_bound = ub;
  if (ub && lb && *ub < *lb) R.upper_bound = double(*lb);
  R.gap = relative_gap(R.lower_bound, R.upper_bound);
  R.stats.wall_time_s = seconds_since(t0);
  return R;
}

SolveResult solve_instance(const Instance& instance, const FormulationKind& kind, const SolveOptions& opts) {
  if (!(opts.time_limit_s > 0)) throw LotError(ErrorCode::BudgetNonPositive, "time limit must be positive");
  auto t0 = Clock::now();
  Formulation F = build_formulation(instance, kind, opts.formulation);
  double build = seconds_since(t0);
  SolveOptions o = opts;
  o.time_limit_s = std::max(1e-3, opts.time_limit_s - build);
  SolveResult R = solve_formulation(F, o);
  R.stats.build_time_s = build;
  R.stats.wall_time_s += build;
  return R;
}

double flow_integrality_residual(const Formulation& F, const std::vector<double>& x, const std::string& backend) {
  std::map<int, double> fix;
  for (int j = 0; j < F.model.num_variables(); ++j)
    if (F.model.variable(j).domain == Domain::Binary) fix[j] = std::round(x[size_t(j)]);
  auto lp = make_backend(backend)->solve_lp(F.model, fix);
  if (!lp.optimal) return -1;
  double worst = 0;
  for (int j = 0; j < F.model.num_variables(); ++j) {
    auto k = F.model.variable(j).ref.kind;
    if (k != VarKind::FlowF && k != VarKind::FlowG) continue;
    double v = lp.x[size_t(j)];
    worst = std::max(worst, std::abs(v - std::round(v)));
  }
  return worst;
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

BenchTable compare_formulations(const std::vector<std::pair<std::string, Instance>>& instances,
                                const std::vector<FormulationKind>& kinds, const SolveOptions& opts, int workers) {
  BenchTable T;
  const size_t nk = kinds.size();
  T.rows.resize(instances.size() * nk);
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t t; (t = next++) < T.rows.size();) {
      const auto& [name, inst] = instances[t / nk];
      BenchRow row;
      row.instance = name;
      row.kind = kinds[t % nk];
      SolveOptions o = opts;
      o.on_round = nullptr;
      try {
        auto r = solve_instance(inst, row.kind, o);
        row.status = r.status;
        row.lb = r.lower_bound;
        row.ub = r.upper_bound;
        row.gap = r.gap;
        row.time_s = r.stats.wall_time_s;
        row.cuts = r.stats.user_cuts;
      } catch (const LotError&) {
        row.status = SolveStatus::Infeasible;
      }
      T.rows[t] = row;
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::max(1, workers); ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  for (size_t i = 0; i < instances.size(); ++i) {
    bool all = true;
    for (size_t k = 0; k < nk; ++k) all = all && T.rows[i * nk + k].status == SolveStatus::Optimal;
    for (size_t k = 0; k < nk; ++k) T.rows[i * nk + k].group = all ? 1 : 2;
  }
  for (size_t k = 0; k < nk; ++k) {
    for (int group : {0, 1, 2}) {
      BenchSummary s;
      s.kind = kinds[k];
      s.group = group;
      std::vector<double> times, gaps;
      for (size_t i = 0; i < instances.size(); ++i) {
        const auto& r = T.rows[i * nk + k];
        if (group != 0 && r.group != group) continue;
        ++s.instances;
        s.optimal += r.status == SolveStatus::Optimal;
        times.push_back(r.time_s);
        if (r.gap) gaps.push_back(*r.gap);
      }
      if (s.instances == 0 && group != 0) continue;
      s.median_time_s = median(times);
      double sum = 0;
      for (double t : times) sum += t;
      s.mean_time_s = times.empty() ? 0 : sum / double(times.size());
      if (!gaps.empty()) {
        double g = 0;
        for (double v : gaps) g += v;
        s.mean_gap = g / double(gaps.size());
        s.median_gap = median(gaps);
      }
      T.summaries.push_back(s);
    }
  }
  return T;
}

}  // namespace lotforge
