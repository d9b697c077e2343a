#include "lotforge/formulations.hpp"

#include <algorithm>
#include <cmath>

#include "lotforge/error.hpp"
#include "lotforge/separation.hpp"

namespace lotforge {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::FlowBased: return "flow";
    case Variant::FlowWithVIs: return "flow-vi";
    case Variant::CutBased: return "bnc";
  }
  return "?";
}

const char* to_string(TurnOption t) {
  switch (t) {
    case TurnOption::Off: return "off";
    case TurnOption::Uniform: return "uniform";
    case TurnOption::NoSharp: return "no_sharp";
    case TurnOption::NoOppositeOverlap: return "no_opposite_overlap";
    case TurnOption::MinSegment: return "min_segment";
  }
  return "?";
}

const char* to_string(MultiEntrance m) {
  switch (m) {
    case MultiEntrance::Single: return "single";
    case MultiEntrance::Connected: return "connected";
    case MultiEntrance::Disjoint: return "disjoint";
  }
  return "?";
}

const char* to_string(Mode m) { return m == Mode::TwoWay ? "two-way" : "one-way"; }

bool RowSet::insert(const LinearConstraint& c) {
  Key k;
  for (const Term& t : c.terms) k.terms.push_back({t.var, std::llround(t.coef * 1e6)});
  std::sort(k.terms.begin(), k.terms.end());
  k.sense = int(c.sense);
  k.rhs = std::llround(c.rhs * 1e6);
  return keys_.insert(std::move(k)).second;
}

Terminals resolve_terminals(const GridSpec& grid, const DriveGraph& graph, MultiEntrance option) {
  Terminals t;
  auto nodes = [&](const std::vector<Cell>& cells) {
    std::vector<int> out;
    for (Cell c : cells) {
      int v = graph.node(c);
      if (v < 0) throw LotError(ErrorCode::EntranceInvalid, "terminal is not a drive node");
      out.push_back(v);
    }
    return out;
  };
  auto ent = nodes(grid.entrances);
  auto ex = nodes(grid.exits);
  if (option != MultiEntrance::Single) {
    bool enough = grid.mode == Mode::TwoWay ? ent.size() >= 2 : (ent.size() >= 2 || ex.size() >= 2);
    if (!enough)
      throw LotError(ErrorCode::FewerThanTwoEntrances,
                     std::string("multi-entrance option ") + to_string(option) + " needs two or more entrances");
  }
  if (option == MultiEntrance::Disjoint) {
    t.roots = ent;
    t.exit_sources = ex;
  } else {
    t.roots = {ent.front()};
    if (!ex.empty()) t.exit_sources = {ex.front()};
  }
  t.fixed_active = ent;
  t.fixed_active.insert(t.fixed_active.end(), ex.begin(), ex.end());
  for (Cell c : grid.existing_drive) t.fixed_active.push_back(graph.node(c));
  std::sort(t.fixed_active.begin(), t.fixed_active.end());
  t.fixed_active.erase(std::unique(t.fixed_active.begin(), t.fixed_active.end()), t.fixed_active.end());
  return t;
}

std::vector<LinearConstraint> emit_single_purpose(const AnchorSets& anchors, const VarIndex& vars) {
  std::vector<LinearConstraint> out;
  RowSet seen;
  for (int r = 0; r < anchors.mu(); ++r) {
    for (int c = 0; c < anchors.nu(); ++c) {
      Cell cell{r, c};
      LinearConstraint base;
      base.sense = Sense::Le;
      base.rhs = 1;
      base.tag = Tag::SinglePurpose;
      for (Cell a : anchors.inv_p0(cell)) base.terms.push_back({1, vars.park(FieldKind::Park0, a)});
      for (Cell a : anchors.inv_p90(cell)) base.terms.push_back({1, vars.park(FieldKind::Park90, a)});
      const auto& drives = anchors.inv_d(cell);
      if (drives.empty()) {
        if (base.terms.size() >= 2 && seen.insert(base)) out.push_back(base);
        continue;
      }
      for (Cell d : drives) {
        LinearConstraint row = base;
        row.terms.push_back({1, vars.drive(d)});
        if (row.terms.size() >= 2 && seen.insert(row)) out.push_back(std::move(row));
      }
    }
  }
  return out;
}

std::vector<LinearConstraint> emit_accessibility(const AnchorSets& anchors, const VarIndex& vars,
                                                 std::vector<int>* zero_fixed) {
  std::vector<LinearConstraint> out;
  for (FieldKind k : {FieldKind::Park0, FieldKind::Park90}) {
    for (Cell a : anchors.anchors(k)) {
      const auto& nb = anchors.access(k, a);
      int x = vars.park(k, a);
      if (nb.empty()) {
        if (zero_fixed) zero_fixed->push_back(x);
        continue;
      }
      LinearConstraint row;
      row.tag = Tag::Accessibility;
      row.sense = Sense::Le;
      row.rhs = 0;
      row.terms.push_back({1, x});
      for (Cell d : nb) row.terms.push_back({-1, vars.drive(d)});
      out.push_back(std::move(row));
    }
  }
  return out;
}

namespace {

// conservation: every non-terminal node absorbs or emits one unit; into_terminals routes
// the flow into the terminal set, otherwise out of it
void emit_commodity(const DriveGraph& g, const VarIndex& vars, const std::vector<int>& flow,
                    const std::vector<int>& terminals, bool into_terminals, std::vector<LinearConstraint>& out) {
  std::vector<uint8_t> is_term(size_t(g.num_nodes()), 0);
  for (int t : terminals) is_term[size_t(t)] = 1;
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (is_term[size_t(v)]) continue;
    LinearConstraint row;
    row.tag = Tag::Flow;
    row.sense = Sense::Eq;
    row.rhs = 0;
    double sgn = into_terminals ? 1.0 : -1.0;
    for (int a : g.out_arcs(v)) row.terms.push_back({sgn, flow[size_t(a)]});
    for (int a : g.in_arcs(v)) row.terms.push_back({-sgn, flow[size_t(a)]});
    row.terms.push_back({-1, vars.drive(g.cell(v))});
    out.push_back(std::move(row));
  }
  // terminal balance: everything that enters (leaves) the terminal set equals the active
  // non-terminal count
  LinearConstraint bal;
  bal.tag = Tag::Flow;
  bal.sense = Sense::Eq;
  bal.rhs = 0;
  for (int t : terminals)
    for (int a : (into_terminals ? g.in_arcs(t) : g.out_arcs(t))) bal.terms.push_back({1, flow[size_t(a)]});
  for (int v = 0; v < g.num_nodes(); ++v)
    if (!is_term[size_t(v)]) bal.terms.push_back({-1, vars.drive(g.cell(v))});
  out.push_back(std::move(bal));
}

void emit_forcing(const DriveGraph& g, const VarIndex& vars, const std::vector<int>& flow, double M,
                  std::vector<LinearConstraint>& out) {
  for (int a = 0; a < g.num_arcs(); ++a) {
    for (int end : {g.arc(a).tail, g.arc(a).head}) {
      LinearConstraint row;
      row.tag = Tag::FlowForcing;
      row.sense = Sense::Le;
      row.rhs = 0;
      row.terms = {{1, flow[size_t(a)]}, {-M, vars.drive(g.cell(end))}};
      out.push_back(std::move(row));
    }
  }
}

}  // namespace

std::vector<LinearConstraint> emit_two_way_flow(const DriveGraph& g, const VarIndex& vars,
                                                const std::vector<int>& roots, bool forcing) {
  std::vector<LinearConstraint> out;
  emit_commodity(g, vars, vars.f, roots, true, out);
  if (forcing) emit_forcing(g, vars, vars.f, double(g.num_nodes() - 1), out);
  return out;
}

std::vector<LinearConstraint> emit_one_way_flow(const DriveGraph& g, const VarIndex& vars, const Terminals& terms,
                                                bool forcing, bool lower_links) {
  std::vector<LinearConstraint> out;
  emit_commodity(g, vars, vars.f, terms.roots, true, out);
  emit_commodity(g, vars, vars.g, terms.exit_sources, false, out);
  const double M = double(g.num_nodes() - 1);
  if (forcing) {
    emit_forcing(g, vars, vars.f, M, out);
    emit_forcing(g, vars, vars.g, M, out);
  }
  for (int a = 0; a < g.num_arcs(); ++a) {
    int z = vars.z[size_t(a)];
    for (int fl : {vars.f[size_t(a)], vars.g[size_t(a)]}) {
      LinearConstraint up;
      up.tag = Tag::DirectionLink;
      up.sense = Sense::Le;
      up.rhs = 0;
      up.terms = {{1, fl}, {-M, z}};
      out.push_back(std::move(up));
      if (lower_links) {
        LinearConstraint lo;
        lo.tag = Tag::DirectionLink;
        lo.sense = Sense::Le;
        lo.rhs = 0;
        lo.terms = {{1, z}, {-1, fl}};
        out.push_back(std::move(lo));
      }
    }
  }
  return out;
}

namespace {

// z <= y at both endpoints and at most one of each anti-parallel pair
void emit_direction_structure(const DriveGraph& g, const VarIndex& vars, std::vector<LinearConstraint>& out) {
  for (int a = 0; a < g.num_arcs(); ++a) {
    for (int end : {g.arc(a).tail, g.arc(a).head}) {
      LinearConstraint row;
      row.tag = Tag::DirectionEndpoint;
      row.sense = Sense::Le;
      row.rhs = 0;
      row.terms = {{1, vars.z[size_t(a)]}, {-1, vars.drive(g.cell(end))}};
      out.push_back(std::move(row));
    }
    int r = g.reverse(a);
    if (r > a) {
      LinearConstraint row;
      row.tag = Tag::AntiParallel;
      row.sense = Sense::Le;
      row.rhs = 1;
      row.terms = {{1, vars.z[size_t(a)]}, {1, vars.z[size_t(r)]}};
      out.push_back(std::move(row));
    }
  }
}

}  // namespace

std::vector<LinearConstraint> emit_turn_restrictions(const AnchorSets& anchors, const DriveGraph& g,
                                                     const VarIndex& vars, TurnOption option) {
  std::vector<LinearConstraint> out;
  RowSet seen;
  auto push = [&](LinearConstraint row) {
    row.tag = Tag::Turn;
    row.sense = Sense::Le;
    if (seen.insert(row)) out.push_back(std::move(row));
  };
  const int delta = anchors.params().delta;
  const int ell = anchors.params().ell;

  if (option == TurnOption::Uniform || option == TurnOption::NoSharp) {
    for (int u = 0; u < g.num_nodes(); ++u) {
      Cell c = g.cell(u);
      for (int dr : {-1, 1}) {
        for (int dc : {-1, 1}) {
          Cell a{c.row + dr, c.col}, b{c.row, c.col + dc};
          if (!g.contains(a) || !g.contains(b)) continue;
          std::vector<Cell> others;
          for (int k = 1; k < delta; ++k) others.push_back({c.row + k * dr, c.col + k * dc});
          if (option == TurnOption::NoSharp) {
            others.push_back({c.row + dr, c.col - dc});
            others.push_back({c.row - dr, c.col + dc});
          }
          for (Cell o : others) {
            if (!g.contains(o)) continue;
            LinearConstraint row;
            row.rhs = 3;
            row.terms = {{1, vars.drive(c)}, {1, vars.drive(a)}, {1, vars.drive(b)}, {1, vars.drive(o)}};
            push(std::move(row));
          }
        }
      }
    }
    return out;
  }
  if (option != TurnOption::NoOppositeOverlap && option != TurnOption::MinSegment) return out;

  auto arc_var = [&](Cell from, Cell to) -> int {
    int u = g.node(from), v = g.node(to);
    if (u < 0 || v < 0) return -1;
    int a = g.arc_between(u, v);
    return a < 0 ? -1 : vars.z[size_t(a)];
  };
  auto pair_row = [&](int z1, int z2) {
    if (z1 < 0 || z2 < 0) return;
    LinearConstraint row;
    row.rhs = 1;
    row.terms = {{1, z1}, {1, z2}};
    push(std::move(row));
  };

  // opposite traffic inside one driving field
  for (int u = 0; u < g.num_nodes(); ++u) {
    Cell c = g.cell(u);
    for (int k = 1; k < delta; ++k) {
      pair_row(arc_var(c, {c.row + 1, c.col}), arc_var({c.row + 1, c.col + k}, {c.row, c.col + k}));
      pair_row(arc_var(c, {c.row, c.col + 1}), arc_var({c.row + k, c.col + 1}, {c.row + k, c.col}));
    }
  }
  if (option != TurnOption::MinSegment) return out;

  // after a turn the outgoing segment must run ell cells before any lateral move
  for (int u = 0; u < g.num_nodes(); ++u) {
    Cell c = g.cell(u);
    for (int din = 0; din < 4; ++din) {
      Cell prev{c.row - kDirRow[size_t(din)], c.col - kDirCol[size_t(din)]};
      int zin = arc_var(prev, c);
      if (zin < 0) continue;
      for (int dout = 0; dout < 4; ++dout) {
        // turns only: perpendicular to the incoming direction
        if (kDirRow[size_t(dout)] * kDirRow[size_t(din)] + kDirCol[size_t(dout)] * kDirCol[size_t(din)] != 0)
          continue;
        int zout = arc_var(c, {c.row + kDirRow[size_t(dout)], c.col + kDirCol[size_t(dout)]});
        if (zout < 0) continue;
        int pr = kDirCol[size_t(dout)], pc = kDirRow[size_t(dout)];  // perpendicular to dout
        for (int k = 1; k < ell; ++k) {
          Cell p{c.row + k * kDirRow[size_t(dout)], c.col + k * kDirCol[size_t(dout)]};
          for (int s : {-1, 1}) {
            int zl = arc_var(p, {p.row + s * pr, p.col + s * pc});
            if (zl < 0) continue;
            LinearConstraint row;
            row.rhs = 2;
            row.terms = {{1, zin}, {1, zout}, {1, zl}};
            push(std::move(row));
          }
        }
      }
    }
  }
  return out;
}

bool balance_identity_holds(const Formulation& form, const std::vector<double>& x, double tol) {
  const auto& g = form.graph;
  const auto& v = form.vars;
  if (v.f.empty() || v.g.empty()) return true;
  std::vector<uint8_t> terminal(size_t(g.num_nodes()), 0);
  for (int t : form.terminals.roots) terminal[size_t(t)] = 1;
  for (int t : form.terminals.exit_sources) terminal[size_t(t)] = 1;
  for (int u = 0; u < g.num_nodes(); ++u) {
    if (terminal[size_t(u)]) continue;
    double out = 0, in = 0;
    for (int a : g.out_arcs(u)) out += x[size_t(v.f[size_t(a)])] + x[size_t(v.g[size_t(a)])];
    for (int a : g.in_arcs(u)) in += x[size_t(v.f[size_t(a)])] + x[size_t(v.g[size_t(a)])];
    if (std::abs(out - in) > tol) return false;
  }
  return true;
}

Formulation build_formulation(const Instance& instance, const FormulationKind& kind, const FormulationOptions& options) {
  Formulation F;
  F.instance = instance;
  F.kind = kind;
  F.options = options;
  F.instance.grid.mode = kind.mode;
  if (kind.mode == Mode::TwoWay) F.instance.grid.exits.clear();
  canonicalize(F.instance.grid);
  const GridSpec& grid = F.instance.grid;
  if (kind.mode == Mode::TwoWay &&
      (kind.turn == TurnOption::NoOppositeOverlap || kind.turn == TurnOption::MinSegment))
    throw LotError(ErrorCode::InvalidInstance, "one-way turn option used in two-way mode");
  if (kind.mode == Mode::OneWay && (kind.turn == TurnOption::Uniform || kind.turn == TurnOption::NoSharp))
    throw LotError(ErrorCode::InvalidInstance, "two-way turn option used in one-way mode");

  F.anchors = compute_anchor_sets(grid, instance.params);
  F.graph = build_drive_graph(F.anchors, grid);
  F.terminals = resolve_terminals(grid, F.graph, kind.multi);

  const auto& A = F.anchors;
  const auto& G = F.graph;
  ModelIR& m = F.model;
  VarIndex& V = F.vars;
  const int ncell = grid.mu * grid.nu;
  V.nu = grid.nu;
  V.x0.assign(size_t(ncell), -1);
  V.x90.assign(size_t(ncell), -1);
  V.y.assign(size_t(ncell), -1);
  for (Cell a : A.p0()) V.x0[size_t(grid.index(a))] = m.add_variable({VarKind::Park0, a, {}}, Domain::Binary, 1);
  for (Cell a : A.p90()) V.x90[size_t(grid.index(a))] = m.add_variable({VarKind::Park90, a, {}}, Domain::Binary, 1);
  for (Cell a : A.d()) V.y[size_t(grid.index(a))] = m.add_variable({VarKind::Drive, a, {}}, Domain::Binary, 1);

  const bool flows = kind.variant != Variant::CutBased;
  const bool one_way = kind.mode == Mode::OneWay;
  const double M = double(std::max(1, G.num_nodes() - 1));
  auto arc_vars = [&](VarKind k, Domain d, double ub) {
    std::vector<int> ids(size_t(G.num_arcs()));
    for (int a = 0; a < G.num_arcs(); ++a) ids[size_t(a)] = m.add_variable({k, G.tail_cell(a), G.head_cell(a)}, d, ub);
    return ids;
  };
  if (flows) V.f = arc_vars(VarKind::FlowF, Domain::Continuous, M);
  if (flows && one_way) V.g = arc_vars(VarKind::FlowG, Domain::Continuous, M);
  if (one_way) V.z = arc_vars(VarKind::DirZ, Domain::Binary, 1);

  for (int v : F.terminals.fixed_active) m.fix(V.drive(G.cell(v)), 1);

  for (auto& c : emit_single_purpose(A, V)) m.add(std::move(c));
  std::vector<int> no_access;
  for (auto& c : emit_accessibility(A, V, &no_access)) m.add(std::move(c));
  for (int x : no_access) m.fix(x, 0);

  if (flows) {
    auto rows = one_way ? emit_one_way_flow(G, V, F.terminals, kind.variant == Variant::FlowBased,
                                            options.direction_lower_links)
                        : emit_two_way_flow(G, V, F.terminals.roots, true);
    for (auto& c : rows) m.add(std::move(c));
  }
  if (one_way) {
    std::vector<LinearConstraint> rows;
    emit_direction_structure(G, V, rows);
    for (auto& c : rows) m.add(std::move(c));
  }
  if (kind.variant != Variant::FlowBased) {
    RowSet seen;
    auto add_unique = [&](std::vector<LinearConstraint> rows) {
      for (auto& c : rows)
        if (seen.insert(c)) m.add(std::move(c));
    };
    if (options.hop.forward) add_unique(forward_hop_inequalities(G, A, V, F.terminals.roots, options.hop));
    if (options.hop.reverse) add_unique(reverse_hop_inequalities(G, A, V, F.terminals.roots, options.hop));
    if (one_way) add_unique(dead_end_prevention(G, V, F.terminals));
  }
  if (kind.turn != TurnOption::Off)
    for (auto& c : emit_turn_restrictions(A, G, V, kind.turn)) m.add(std::move(c));
  m.check();
  return F;
}

}  // namespace lotforge
