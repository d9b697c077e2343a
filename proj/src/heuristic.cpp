#include "lotforge/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <set>

#include "lotforge/engine.hpp"

namespace lotforge {

bool satisfies_all_rows(const ModelIR& model, const std::vector<double>& x, double tol) {
  if (int(x.size()) != model.num_variables()) return false;
  for (int j = 0; j < model.num_variables(); ++j) {
    const Variable& v = model.variable(j);
    if (x[size_t(j)] < v.lb - tol || x[size_t(j)] > v.ub + tol) return false;
  }
  for (auto [j, val] : model.fixings())
    if (std::abs(x[size_t(j)] - val) > tol) return false;
  for (const auto& c : model.constraints())
    if (c.violated(x, tol)) return false;
  return true;
}

namespace {

// tree flow: parent arc per node, value = size of the subtree hanging below it
void route(const DriveGraph& g, const std::vector<int>& seeds, const std::vector<uint8_t>& active,
           const std::function<bool(int)>& usable, bool toward, const std::vector<int>& flow_vars,
           std::vector<double>& x) {
  const int n = g.num_nodes();
  std::vector<int> parent_arc(size_t(n), -1), order;
  std::vector<uint8_t> seen(size_t(n), 0);
  std::deque<int> q;
  for (int s : seeds)
    if (!seen[size_t(s)]) seen[size_t(s)] = 1, q.push_back(s);
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    order.push_back(u);
    // toward the seeds: look for arcs v->u; away from them: arcs u->v
    for (int a : (toward ? g.in_arcs(u) : g.out_arcs(u))) {
      int v = toward ? g.arc(a).tail : g.arc(a).head;
      if (seen[size_t(v)] || !active[size_t(v)] || !usable(a)) continue;
      seen[size_t(v)] = 1;
      parent_arc[size_t(v)] = a;
      q.push_back(v);
    }
  }
  std::vector<double> sub(size_t(n), 1.0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it, a = parent_arc[size_t(v)];
    if (a < 0) continue;
    x[size_t(flow_vars[size_t(a)])] = sub[size_t(v)];
    int p = toward ? g.arc(a).head : g.arc(a).tail;
    sub[size_t(p)] += sub[size_t(v)];
  }
}

}  // namespace

std::vector<double> complete_assignment(const Formulation& F, const Layout& L) {
  std::vector<double> x = assignment_from_layout(F, L);
  const DriveGraph& g = F.graph;
  if (F.vars.f.empty()) return x;
  std::vector<uint8_t> active(size_t(g.num_nodes()), 0);
  for (Cell c : L.drive) {
    int v = g.node(c);
    if (v >= 0) active[size_t(v)] = 1;
  }
  if (F.kind.mode == Mode::TwoWay) {
    route(g, F.terminals.roots, active, [](int) { return true; }, true, F.vars.f, x);
  } else {
    auto on = [&](int a) { return x[size_t(F.vars.z[size_t(a)])] > 0.5; };
    route(g, F.terminals.roots, active, on, true, F.vars.f, x);
    route(g, F.terminals.exit_sources, active, on, false, F.vars.g, x);
  }
  return x;
}

namespace {

struct Rounder {
  const Formulation& F;
  const std::vector<double>& lp;
  const DriveGraph& g;
  const AnchorSets& A;
  const GridSpec& grid;
  int n;
  std::vector<uint8_t> fixed;
  // parking candidates sorted by LP value
  struct Cand {
    FieldKind kind;
    Cell anchor;
    std::vector<int> cells;
    std::vector<int> access;
  };
  std::vector<Cand> cands;
  std::vector<std::vector<int>> drive_cells;

  Rounder(const Formulation& form, const std::vector<double>& x)
      : F(form), lp(x), g(form.graph), A(form.anchors), grid(form.instance.grid), n(form.graph.num_nodes()) {
    fixed.assign(size_t(n), 0);
    for (int v : F.terminals.fixed_active) fixed[size_t(v)] = 1;
    std::vector<std::pair<double, size_t>> order;
    for (FieldKind k : {FieldKind::Park0, FieldKind::Park90}) {
      for (Cell a : A.anchors(k)) {
        int var = F.vars.park(k, a);
        if (var < 0) continue;
        auto fx = F.model.fixings().find(var);
        if (fx != F.model.fixings().end() && fx->second < 0.5) continue;
        Cand c{k, a, {}, {}};
        for (Cell f : A.footprint(k, a)) c.cells.push_back(grid.index(f));
        for (Cell d : A.access(k, a)) c.access.push_back(g.node(d));
        order.push_back({-lp[size_t(var)], cands.size()});
        cands.push_back(std::move(c));
      }
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Cand> sorted;
    for (auto& [v, i] : order) sorted.push_back(cands[i]);
    cands = std::move(sorted);
    for (Cell c : g.nodes()) {
      std::vector<int> cells;
      for (Cell f : A.footprint(FieldKind::Drive, c)) cells.push_back(grid.index(f));
      drive_cells.push_back(cells);
    }
  }

  double y(int v) const { return lp[size_t(F.vars.drive(g.cell(v)))]; }

  // two-way: keep what touches the roots, then pull in stray fixed fields along shortest paths
  bool connect(std::vector<uint8_t>& S) const {
    for (int v = 0; v < n; ++v)
      if (fixed[size_t(v)]) S[size_t(v)] = 1;
    int count = 0;
    auto comp = components(g, S, &count);
    std::vector<uint8_t> keep_comp(size_t(count), 0);
    const auto& roots = F.terminals.roots;
    if (F.kind.multi == MultiEntrance::Disjoint) {
      for (int r : roots) keep_comp[size_t(comp[size_t(r)])] = 1;
    } else {
      keep_comp[size_t(comp[size_t(roots.front())])] = 1;
    }
    std::vector<uint8_t> kept(size_t(n), 0);
    for (int v = 0; v < n; ++v) kept[size_t(v)] = S[size_t(v)] && keep_comp[size_t(comp[size_t(v)])];
    for (int v = 0; v < n; ++v) {
      if (!fixed[size_t(v)] || kept[size_t(v)]) continue;
      // BFS from v through any drive anchor until the kept set is hit
      std::vector<int> par(size_t(n), -2);
      std::deque<int> q{v};
      par[size_t(v)] = -1;
      int hit = -1;
      while (!q.empty() && hit < 0) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u)) {
          if (par[size_t(w)] != -2) continue;
          par[size_t(w)] = u;
          if (kept[size_t(w)]) {
            hit = w;
            break;
          }
          q.push_back(w);
        }
      }
      if (hit < 0) return false;
      for (int u = par[size_t(hit)]; u >= 0; u = par[size_t(u)]) kept[size_t(u)] = 1;
    }
    S = kept;
    return true;
  }

  // one-way: the bridgeless core around the entrance once virtual entrance-exit edges are
  // added, oriented along a DFS tree
  bool orient(std::vector<uint8_t>& S, std::vector<std::pair<int, int>>& arcs) const {
    for (int v = 0; v < n; ++v)
      if (fixed[size_t(v)]) S[size_t(v)] = 1;
    const auto& roots = F.terminals.roots;
    const auto& exits = F.terminals.exit_sources;
    if (roots.empty() || exits.empty()) return false;
    std::vector<std::pair<int, int>> edges;
    std::vector<uint8_t> is_virtual;
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
    auto add = [&](int u, int v, bool virt) {
      int id = int(edges.size());
      edges.push_back({u, v});
      is_virtual.push_back(virt);
      adj[size_t(u)].push_back({v, id});
      adj[size_t(v)].push_back({u, id});
    };
    for (int r : roots)
      for (int s : exits) add(r, s, true);
    for (int a = 0; a < g.num_arcs(); ++a) {
      auto [u, v] = g.arc(a);
      if (u < v && S[size_t(u)] && S[size_t(v)]) add(u, v, false);
    }
    // bridges
    std::vector<int> disc(size_t(n), -1), low(size_t(n), 0);
    std::vector<uint8_t> bridge(edges.size(), 0);
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int via) {
      disc[size_t(u)] = low[size_t(u)] = timer++;
      for (auto [w, id] : adj[size_t(u)]) {
        if (id == via) continue;
        if (disc[size_t(w)] < 0) {
          dfs(w, id);
          low[size_t(u)] = std::min(low[size_t(u)], low[size_t(w)]);
          if (low[size_t(w)] > disc[size_t(u)]) bridge[size_t(id)] = 1;
        } else {
          low[size_t(u)] = std::min(low[size_t(u)], disc[size_t(w)]);
        }
      }
    };
    int e = roots.front();
    dfs(e, -1);
    // component of e without bridges
    std::vector<uint8_t> core(size_t(n), 0);
    std::vector<int> st{e};
    core[size_t(e)] = 1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (auto [w, id] : adj[size_t(u)])
        if (!bridge[size_t(id)] && !core[size_t(w)]) core[size_t(w)] = 1, st.push_back(w);
    }
    for (int v = 0; v < n; ++v)
      if (fixed[size_t(v)] && !core[size_t(v)]) return false;
    // DFS orientation inside the core: tree edges down, back edges up
    std::vector<uint8_t> used(edges.size(), 0), seen(size_t(n), 0);
    std::vector<std::pair<int, int>> oriented;
    std::vector<uint8_t> oriented_virtual;
    std::function<void(int)> walk = [&](int u) {
      seen[size_t(u)] = 1;
      for (auto [w, id] : adj[size_t(u)]) {
        if (used[size_t(id)] || bridge[size_t(id)] || !core[size_t(w)]) continue;
        used[size_t(id)] = 1;
        oriented.push_back({u, w});
        oriented_virtual.push_back(is_virtual[size_t(id)]);
        if (!seen[size_t(w)]) walk(w);
      }
    };
    walk(e);
    // virtual edges must run entrance to exit; reversing a strong orientation keeps it strong
    bool flip = false;
    for (size_t k = 0; k < oriented.size(); ++k)
      if (oriented_virtual[k] && std::find(exits.begin(), exits.end(), oriented[k].first) != exits.end()) flip = true;
    arcs.clear();
    for (size_t k = 0; k < oriented.size(); ++k) {
      if (oriented_virtual[k]) continue;
      auto [u, w] = oriented[k];
      arcs.push_back(flip ? std::pair{w, u} : std::pair{u, w});
    }
    S = core;
    return true;
  }

  Layout pack(const std::vector<uint8_t>& S) const {
    Layout L;
    std::vector<uint8_t> used(size_t(grid.size()), 0);
    for (int v = 0; v < n; ++v) {
      if (!S[size_t(v)]) continue;
      L.drive.push_back(g.cell(v));
      for (int c : drive_cells[size_t(v)]) used[size_t(c)] = 1;
    }
    for (const Cand& c : cands) {
      bool ok = false;
      for (int d : c.access) ok = ok || (d >= 0 && S[size_t(d)]);
      for (int cell : c.cells) ok = ok && !used[size_t(cell)];
      if (!ok) continue;
      for (int cell : c.cells) used[size_t(cell)] = 1;
      (c.kind == FieldKind::Park0 ? L.park0 : L.park90).push_back(c.anchor);
    }
    std::sort(L.park0.begin(), L.park0.end());
    std::sort(L.park90.begin(), L.park90.end());
    L.stall_count = int(L.park0.size() + L.park90.size());
    return L;
  }

  // repaired drive set plus its layout; false when repair fails
  bool build(std::vector<uint8_t> S, Layout& L, std::vector<uint8_t>* final_set) const {
    std::vector<std::pair<int, int>> arcs;
    bool ok = F.kind.mode == Mode::TwoWay ? connect(S) : orient(S, arcs);
    if (!ok) return false;
    L = pack(S);
    for (auto [u, w] : arcs) L.directions.push_back({g.cell(u), g.cell(w)});
    std::sort(L.directions.begin(), L.directions.end());
    if (final_set) *final_set = S;
    return true;
  }
};

}  // namespace

std::optional<std::vector<double>> round_to_layout(const Formulation& F, const std::vector<double>& lp_x,
                                                   const HeuristicOptions& opts) {
  if (F.graph.num_nodes() == 0 || F.terminals.roots.empty()) return std::nullopt;
  Rounder R(F, lp_x);
  const int n = R.n;
  std::optional<Layout> best;
  std::set<std::vector<uint8_t>> tried;
  for (double theta : opts.thresholds) {
    std::vector<uint8_t> S(size_t(n), 0);
    for (int v = 0; v < n; ++v) S[size_t(v)] = R.y(v) >= theta - 1e-9;
    if (!tried.insert(S).second) continue;
    Layout L;
    std::vector<uint8_t> cur;
    if (!R.build(S, L, &cur)) continue;
    // drop single drive fields, least LP-supported first
    for (int pass = 0; pass < opts.improve_passes; ++pass) {
      std::vector<int> order;
      for (int v = 0; v < n; ++v)
        if (cur[size_t(v)] && !R.fixed[size_t(v)]) order.push_back(v);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return R.y(a) < R.y(b); });
      bool improved = false;
      for (int v : order) {
        if (!cur[size_t(v)]) continue;
        auto T = cur;
        T[size_t(v)] = 0;
        Layout L2;
        std::vector<uint8_t> next;
        if (!R.build(T, L2, &next)) continue;
        if (L2.stall_count > L.stall_count) {
          L = std::move(L2);
          cur = std::move(next);
          improved = true;
        }
      }
      if (!improved) break;
    }
    if (!best || L.stall_count > best->stall_count) best = std::move(L);
  }
  if (!best) return std::nullopt;
  auto x = complete_assignment(F, *best);
  if (!satisfies_all_rows(F.model, x)) return std::nullopt;
  return x;
}

}  // namespace lotforge
