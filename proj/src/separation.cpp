#include "lotforge/separation.hpp"

#include <algorithm>

#include "lotforge/error.hpp"
#include "lotforge/maxflow.hpp"

namespace lotforge {

namespace {

std::vector<uint8_t> mask_of(int n, const std::vector<int>& nodes) {
  std::vector<uint8_t> m(size_t(n), 0);
  for (int v : nodes) m[size_t(v)] = 1;
  return m;
}

// nodes reachable from sources in the undirected graph without entering removed nodes
std::vector<uint8_t> reach(const DriveGraph& g, const std::vector<int>& sources, const std::vector<uint8_t>& removed) {
  auto dist = bfs_distances(g, sources, removed);
  std::vector<uint8_t> m(size_t(g.num_nodes()), 0);
  for (int v = 0; v < g.num_nodes(); ++v) m[size_t(v)] = dist[size_t(v)] >= 0;
  return m;
}

// nodes of `ring` adjacent to `side`
std::vector<int> boundary(const DriveGraph& g, const std::vector<int>& ring, const std::vector<uint8_t>& side) {
  std::vector<int> out;
  for (int v : ring) {
    for (int w : g.neighbors(v)) {
      if (side[size_t(w)]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

std::vector<uint8_t> inverted(const std::vector<uint8_t>& m) {
  std::vector<uint8_t> out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i] = !m[i];
  return out;
}

std::vector<int> drive_vars(const DriveGraph& g, const VarIndex& vars, const std::vector<int>& nodes) {
  std::vector<int> out;
  for (int v : nodes) out.push_back(vars.drive(g.cell(v)));
  return out;
}

bool is_lazy_hop(int depth, size_t rhs, const HopConfig& cfg) {
  return depth > cfg.regular_max_depth && int(rhs) > cfg.regular_max_rhs;
}

}  // namespace

VertexSeparator min_vertex_cut(const DriveGraph& g, const std::vector<int>& source_set,
                               const std::vector<int>& sink_set) {
  const int n = g.num_nodes();
  if (source_set.empty() || sink_set.empty())
    throw LotError(ErrorCode::NoSeparatorExists, "empty terminal set");
  auto src = mask_of(n, source_set), snk = mask_of(n, sink_set);
  for (int v : sink_set)
    if (src[size_t(v)]) throw LotError(ErrorCode::NoSeparatorExists, "source and sink sets overlap");

  MaxFlow mf(2 * n + 2);
  const int S = 2 * n, T = 2 * n + 1;
  for (int v = 0; v < n; ++v) {
    bool contracted = src[size_t(v)] || snk[size_t(v)];
    mf.add_edge(2 * v, 2 * v + 1, contracted ? MaxFlow::kInf : 1);
  }
  for (const Arc& a : g.arcs()) mf.add_edge(2 * a.tail + 1, 2 * a.head, MaxFlow::kInf);
  for (int v : source_set) mf.add_edge(S, 2 * v, MaxFlow::kInf);
  for (int v : sink_set) mf.add_edge(2 * v + 1, T, MaxFlow::kInf);
  if (mf.run(S, T) >= MaxFlow::kInf)
    throw LotError(ErrorCode::NoSeparatorExists, "source and sink sets are adjacent");

  auto seen = mf.reachable(S);
  std::vector<int> cut;
  std::vector<uint8_t> removed(size_t(n), 0);
  for (int v = 0; v < n; ++v) {
    if (seen[size_t(2 * v)] && !seen[size_t(2 * v + 1)]) {
      cut.push_back(v);
      removed[size_t(v)] = 1;
    }
  }
  auto sink_side = reach(g, sink_set, removed);
  VertexSeparator sep;
  sep.cut_nodes = boundary(g, cut, sink_side);
  auto cut_mask = mask_of(n, sep.cut_nodes);
  auto near = reach(g, source_set, cut_mask);
  for (int v = 0; v < n; ++v) {
    if (cut_mask[size_t(v)]) continue;
    (near[size_t(v)] ? sep.near_side : sep.far_side).push_back(v);
  }
  return sep;
}

EdgeCut min_weighted_edge_cut(const DriveGraph& g, const std::vector<uint8_t>& z_active,
                              const std::vector<int>& source_seed, const std::vector<int>& sink_seed) {
  const int n = g.num_nodes();
  if (source_seed.empty() || sink_seed.empty())
    throw LotError(ErrorCode::NoSeparatorExists, "empty seed set");
  auto src = mask_of(n, source_seed);
  for (int v : sink_seed)
    if (src[size_t(v)]) throw LotError(ErrorCode::NoSeparatorExists, "seed sets overlap");
  const MaxFlow::Cap heavy = std::max(1, g.num_arcs());
  MaxFlow mf(n + 2);
  const int S = n, T = n + 1;
  for (int a = 0; a < g.num_arcs(); ++a) mf.add_edge(g.arc(a).tail, g.arc(a).head, z_active[size_t(a)] ? heavy : 1);
  for (int v : source_seed) mf.add_edge(S, v, MaxFlow::kInf);
  for (int v : sink_seed) mf.add_edge(v, T, MaxFlow::kInf);
  mf.run(S, T);
  auto seen = mf.reachable(S);
  EdgeCut cut;
  for (int v = 0; v < n; ++v) (seen[size_t(v)] ? cut.source_side : cut.sink_side).push_back(v);
  for (int a = 0; a < g.num_arcs(); ++a) {
    if (seen[size_t(g.arc(a).tail)] && !seen[size_t(g.arc(a).head)]) {
      if (z_active[size_t(a)]) throw LotError(ErrorCode::CutContainsHeavyArc, "minimum cut crosses an active arc");
      cut.cut_arcs.push_back(a);
    }
  }
  return cut;
}

bool separates(const DriveGraph& g, const VertexSeparator& sep) {
  const int n = g.num_nodes();
  if (int(sep.cut_nodes.size() + sep.near_side.size() + sep.far_side.size()) != n) return false;
  auto cut = mask_of(n, sep.cut_nodes);
  auto near = mask_of(n, sep.near_side);
  auto far = mask_of(n, sep.far_side);
  for (int v = 0; v < n; ++v)
    if (int(cut[size_t(v)]) + near[size_t(v)] + far[size_t(v)] != 1) return false;
  auto r = reach(g, sep.near_side, cut);
  for (int v : sep.far_side)
    if (r[size_t(v)]) return false;
  return true;
}

bool separates(const DriveGraph& g, const EdgeCut& cut) {
  const int n = g.num_nodes();
  std::vector<uint8_t> removed(size_t(g.num_arcs()), 0);
  for (int a : cut.cut_arcs) removed[size_t(a)] = 1;
  std::vector<uint8_t> seen(size_t(n), 0);
  std::vector<int> stack = cut.source_side;
  for (int v : stack) seen[size_t(v)] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int a : g.out_arcs(u)) {
      int v = g.arc(a).head;
      if (!removed[size_t(a)] && !seen[size_t(v)]) {
        seen[size_t(v)] = 1;
        stack.push_back(v);
      }
    }
  }
  for (int v : cut.sink_side)
    if (seen[size_t(v)]) return false;
  return true;
}

LinearConstraint connectivity_row(const AnchorSets& anchors, const DriveGraph& g, const VarIndex& vars, int cell,
                                  const std::vector<uint8_t>& inside, const std::vector<int>& rhs_vars, Tag tag) {
  LinearConstraint row;
  row.tag = tag;
  row.sense = Sense::Le;
  row.rhs = 0;
  Cell c = g.cell(cell);
  row.terms.push_back({1, vars.drive(c)});
  for (FieldKind k : {FieldKind::Park0, FieldKind::Park90}) {
    for (Cell a : anchors.covering(k, c)) {
      bool ok = true;
      for (Cell d : anchors.access(k, a)) {
        if (!inside[size_t(g.node(d))]) {
          ok = false;
          break;
        }
      }
      if (ok) row.terms.push_back({1, vars.park(k, a)});
    }
  }
  for (int v : rhs_vars) row.terms.push_back({-1, v});
  return row;
}

std::vector<int> unsound_parking_terms(const AnchorSets& anchors, const DriveGraph& g, const ModelIR& model,
                                       const LinearConstraint& row, const std::vector<uint8_t>& inside) {
  std::vector<int> bad;
  for (const Term& t : row.terms) {
    const VarRef& r = model.variable(t.var).ref;
    if (t.coef <= 0 || (r.kind != VarKind::Park0 && r.kind != VarKind::Park90)) continue;
    auto k = r.kind == VarKind::Park0 ? FieldKind::Park0 : FieldKind::Park90;
    for (Cell d : anchors.access(k, r.a)) {
      if (!inside[size_t(g.node(d))]) {
        bad.push_back(t.var);
        break;
      }
    }
  }
  return bad;
}

std::vector<LinearConstraint> forward_hop_inequalities(const DriveGraph& g, const AnchorSets& anchors,
                                                       const VarIndex& vars, const std::vector<int>& roots,
                                                       const HopConfig& cfg) {
  std::vector<LinearConstraint> out;
  const int n = g.num_nodes();
  auto is_root = mask_of(n, roots);
  for (int c = 0; c < n; ++c) {
    if (is_root[size_t(c)]) continue;
    auto dist = bfs_distances(g, {c});
    int pi = -1;
    for (int r : roots)
      if (dist[size_t(r)] >= 0 && (pi < 0 || dist[size_t(r)] < pi)) pi = dist[size_t(r)];
    if (pi < 0) continue;  // unreachable cells are handled by the reverse family
    std::vector<std::vector<int>> rings(static_cast<size_t>(pi));
    for (int v = 0; v < n; ++v)
      if (dist[size_t(v)] >= 1 && dist[size_t(v)] < pi) rings[size_t(dist[size_t(v)])].push_back(v);
    for (int d = 1; d < pi; ++d) {
      const auto& ring = rings[size_t(d)];
      auto root_side = reach(g, roots, mask_of(n, ring));
      auto sep = boundary(g, ring, root_side);
      auto root_side2 = reach(g, roots, mask_of(n, sep));
      auto row = connectivity_row(anchors, g, vars, c, inverted(root_side2), drive_vars(g, vars, sep), Tag::HopForward);
      row.lazy = is_lazy_hop(d, sep.size(), cfg);
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<LinearConstraint> reverse_hop_inequalities(const DriveGraph& g, const AnchorSets& anchors,
                                                       const VarIndex& vars, const std::vector<int>& roots,
                                                       const HopConfig& cfg) {
  std::vector<LinearConstraint> out;
  const int n = g.num_nodes();
  auto dist = bfs_distances(g, roots);
  int maxd = 0;
  std::vector<int> islands;
  for (int v = 0; v < n; ++v) {
    if (dist[size_t(v)] < 0)
      islands.push_back(v);
    else
      maxd = std::max(maxd, dist[size_t(v)]);
  }
  if (!islands.empty()) {
    auto inside = mask_of(n, islands);
    for (int v : islands) out.push_back(connectivity_row(anchors, g, vars, v, inside, {}, Tag::HopReverse));
  }
  for (int d = 1; d < maxd; ++d) {
    std::vector<int> ring;
    std::vector<uint8_t> beyond(size_t(n), 0);
    for (int v = 0; v < n; ++v) {
      if (dist[size_t(v)] == d) ring.push_back(v);
      if (dist[size_t(v)] > d) beyond[size_t(v)] = 1;
    }
    int ncomp = 0;
    auto comp = components(g, beyond, &ncomp);
    for (int k = 0; k < ncomp; ++k) {
      std::vector<uint8_t> in_k(size_t(n), 0);
      std::vector<int> members;
      for (int v = 0; v < n; ++v)
        if (comp[size_t(v)] == k) {
          in_k[size_t(v)] = 1;
          members.push_back(v);
        }
      auto sep = boundary(g, ring, in_k);
      auto root_side = reach(g, roots, mask_of(n, sep));
      auto inside = inverted(root_side);
      auto rhs = drive_vars(g, vars, sep);
      bool lazy = is_lazy_hop(d, sep.size(), cfg);
      for (int v : members) {
        auto row = connectivity_row(anchors, g, vars, v, inside, rhs, Tag::HopReverse);
        row.lazy = lazy;
        out.push_back(std::move(row));
      }
    }
  }
  return out;
}

std::vector<LinearConstraint> dead_end_prevention(const DriveGraph& g, const VarIndex& vars, const Terminals& terms) {
  std::vector<LinearConstraint> out;
  const int n = g.num_nodes();
  auto is_root = mask_of(n, terms.roots);
  auto is_exit = mask_of(n, terms.exit_sources);
  auto row_of = [](Sense s, double rhs) {
    LinearConstraint r;
    r.tag = Tag::DeadEnd;
    r.sense = s;
    r.rhs = rhs;
    return r;
  };
  for (int v = 0; v < n; ++v) {
    int y = vars.drive(g.cell(v));
    bool terminal = is_root[size_t(v)] || is_exit[size_t(v)];
    if (!terminal) {
      if (g.neighbors(v).size() <= 1) {
        auto r = row_of(Sense::Le, 0);
        r.terms = {{1, y}};
        out.push_back(std::move(r));
        continue;
      }
      auto r = row_of(Sense::Ge, 0);
      for (int w : g.neighbors(v)) r.terms.push_back({1, vars.drive(g.cell(w))});
      r.terms.push_back({-2, y});
      out.push_back(std::move(r));
    }
    if (!is_root[size_t(v)]) {
      auto r = row_of(Sense::Ge, 0);
      for (int a : g.out_arcs(v)) r.terms.push_back({1, vars.z[size_t(a)]});
      r.terms.push_back({-1, y});
      out.push_back(std::move(r));
    }
    if (!is_exit[size_t(v)]) {
      auto r = row_of(Sense::Ge, 0);
      for (int a : g.in_arcs(v)) r.terms.push_back({1, vars.z[size_t(a)]});
      r.terms.push_back({-1, y});
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

std::vector<uint8_t> active_nodes(const Formulation& form, const std::vector<double>& x) {
  const auto& g = form.graph;
  std::vector<uint8_t> m(size_t(g.num_nodes()), 0);
  for (int v = 0; v < g.num_nodes(); ++v) m[size_t(v)] = x[size_t(form.vars.drive(g.cell(v)))] > 0.5;
  return m;
}

void audit(const Formulation& form, const std::vector<double>& x, const LinearConstraint& row,
           const std::vector<uint8_t>& inside, SeparationStats* stats) {
  if (!stats) return;
  if (!row.violated(x)) ++stats->nonviolated_cuts;
  if (!unsound_parking_terms(form.anchors, form.graph, form.model, row, inside).empty()) ++stats->unsound_rows;
}

}  // namespace

std::vector<LinearConstraint> separate_two_way(const Formulation& form, const std::vector<double>& x,
                                               const SeparationOptions& opts, SeparationStats* stats) {
  const auto& g = form.graph;
  const int n = g.num_nodes();
  std::vector<LinearConstraint> out;
  if (stats) ++stats->calls;
  auto active = active_nodes(form, x);
  int ncomp = 0;
  auto comp = components(g, active, &ncomp);
  std::vector<uint8_t> rooted(size_t(ncomp), 0);
  for (int r : form.terminals.roots)
    if (comp[size_t(r)] >= 0) rooted[size_t(comp[size_t(r)])] = 1;

  for (int k = 0; k < ncomp; ++k) {
    if (rooted[size_t(k)]) continue;
    std::vector<int> stranded, others;
    for (int v = 0; v < n; ++v) {
      if (!active[size_t(v)]) continue;
      (comp[size_t(v)] == k ? stranded : others).push_back(v);
    }
    VertexSeparator sep = min_vertex_cut(g, others, stranded);
    if (stats) ++stats->separators;
    if (opts.verify && !separates(g, sep) && stats) ++stats->separator_failures;
    auto root_side = reach(g, form.terminals.roots, mask_of(n, sep.cut_nodes));
    auto inside = inverted(root_side);
    auto rhs = drive_vars(g, form.vars, sep.cut_nodes);
    for (int v : stranded) {
      auto row = connectivity_row(form.anchors, g, form.vars, v, inside, rhs, Tag::FeasibilityCut);
      row.lazy = true;
      if (opts.verify) audit(form, x, row, inside, stats);
      out.push_back(std::move(row));
      if (!opts.cut_per_cell) break;
    }
  }
  if (stats) stats->cuts += int(out.size());
  return out;
}

namespace {

// nodes that reach (toward = true) or are reached from the seeds along active arcs
std::vector<uint8_t> directed_reach(const DriveGraph& g, const std::vector<uint8_t>& z_active,
                                    const std::vector<int>& seeds, bool toward) {
  std::vector<uint8_t> seen(size_t(g.num_nodes()), 0);
  std::vector<int> stack;
  for (int s : seeds) {
    seen[size_t(s)] = 1;
    stack.push_back(s);
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int a : (toward ? g.in_arcs(u) : g.out_arcs(u))) {
      if (!z_active[size_t(a)]) continue;
      int v = toward ? g.arc(a).tail : g.arc(a).head;
      if (!seen[size_t(v)]) {
        seen[size_t(v)] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

std::vector<std::vector<int>> stranded_groups(const DriveGraph& g, const std::vector<uint8_t>& stranded,
                                              bool per_component) {
  std::vector<std::vector<int>> groups;
  if (!per_component) {
    std::vector<int> all;
    for (int v = 0; v < g.num_nodes(); ++v)
      if (stranded[size_t(v)]) all.push_back(v);
    if (!all.empty()) groups.push_back(std::move(all));
    return groups;
  }
  int ncomp = 0;
  auto comp = components(g, stranded, &ncomp);
  groups.resize(size_t(ncomp));
  for (int v = 0; v < g.num_nodes(); ++v)
    if (comp[size_t(v)] >= 0) groups[size_t(comp[size_t(v)])].push_back(v);
  return groups;
}

}  // namespace

std::vector<LinearConstraint> separate_one_way(const Formulation& form, const std::vector<double>& x,
                                               const SeparationOptions& opts, SeparationStats* stats) {
  const auto& g = form.graph;
  const int n = g.num_nodes();
  std::vector<LinearConstraint> out;
  if (stats) ++stats->calls;
  auto active = active_nodes(form, x);
  std::vector<uint8_t> z_active(size_t(g.num_arcs()), 0);
  for (int a = 0; a < g.num_arcs(); ++a) z_active[size_t(a)] = x[size_t(form.vars.z[size_t(a)])] > 0.5;

  auto emit = [&](const EdgeCut& cut, const std::vector<int>& cells, const std::vector<uint8_t>& inside) {
    if (stats) ++stats->separators;
    if (opts.verify && !separates(g, cut) && stats) ++stats->separator_failures;
    std::vector<int> rhs;
    for (int a : cut.cut_arcs) rhs.push_back(form.vars.z[size_t(a)]);
    for (int v : cells) {
      auto row = connectivity_row(form.anchors, g, form.vars, v, inside, rhs, Tag::FeasibilityCut);
      row.lazy = true;
      if (opts.verify) audit(form, x, row, inside, stats);
      out.push_back(std::move(row));
      if (!opts.cut_per_cell) break;
    }
  };

  // entrance side: active cells without a directed path to a root
  auto to_root = directed_reach(g, z_active, form.terminals.roots, true);
  std::vector<uint8_t> stranded(size_t(n), 0);
  std::vector<int> reached;
  for (int v = 0; v < n; ++v) {
    if (!active[size_t(v)]) continue;
    if (to_root[size_t(v)])
      reached.push_back(v);
    else
      stranded[size_t(v)] = 1;
  }
  for (const auto& group : stranded_groups(g, stranded, opts.per_component_edge_cuts)) {
    EdgeCut cut = min_weighted_edge_cut(g, z_active, group, reached);
    emit(cut, group, mask_of(n, cut.source_side));
  }

  // exit side: active cells not reachable from an exit
  auto from_exit = directed_reach(g, z_active, form.terminals.exit_sources, false);
  std::fill(stranded.begin(), stranded.end(), 0);
  reached.clear();
  for (int v = 0; v < n; ++v) {
    if (!active[size_t(v)]) continue;
    if (from_exit[size_t(v)])
      reached.push_back(v);
    else
      stranded[size_t(v)] = 1;
  }
  for (const auto& group : stranded_groups(g, stranded, opts.per_component_edge_cuts)) {
    EdgeCut cut = min_weighted_edge_cut(g, z_active, reached, group);
    emit(cut, group, mask_of(n, cut.sink_side));
  }
  if (stats) stats->cuts += int(out.size());
  return out;
}

}  // namespace lotforge
