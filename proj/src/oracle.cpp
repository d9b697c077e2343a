#include "lotforge/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "lotforge/error.hpp"

namespace lotforge {

namespace {

struct Packer {
  const std::vector<uint64_t>& conflict;
  int best = -1;
  uint64_t best_set = 0;

  void run(uint64_t cand, uint64_t chosen, int count) {
    if (cand == 0) {
      if (count > best) best = count, best_set = chosen;
      return;
    }
    if (count + std::popcount(cand) <= best) return;
    // greedy clique cover gives a tighter bound
    int cover = 0;
    for (uint64_t rest = cand; rest;) {
      int v = std::countr_zero(rest);
      uint64_t clique = uint64_t(1) << v;
      for (uint64_t c = rest & conflict[size_t(v)]; c; c &= c - 1) {
        int w = std::countr_zero(c);
        if ((conflict[size_t(w)] & clique) == clique) clique |= uint64_t(1) << w;
      }
      rest &= ~clique;
      ++cover;
    }
    if (count + cover <= best) return;
    // branch on the candidate with most conflicts
    int pick = -1, deg = -1;
    for (uint64_t c = cand; c; c &= c - 1) {
      int v = std::countr_zero(c);
      int d = std::popcount(conflict[size_t(v)] & cand);
      if (d > deg) deg = d, pick = v;
    }
    uint64_t bit = uint64_t(1) << pick;
    if (deg == 0) {
      // no conflicts left: take them all
      run(0, chosen | cand, count + std::popcount(cand));
      return;
    }
    run(cand & ~bit & ~conflict[size_t(pick)], chosen | bit, count + 1);
    run(cand & ~bit, chosen, count);
  }
};

// parking candidates, their footprints and access sets in node ids
struct ParkingTable {
  std::vector<std::pair<FieldKind, Cell>> fields;
  std::vector<std::vector<int>> cells;   // grid indices
  std::vector<std::vector<int>> access;  // drive node ids
  std::vector<uint64_t> conflict;
};

ParkingTable parking_table(const AnchorSets& A, const DriveGraph& g, const GridSpec& grid) {
  ParkingTable t;
  for (FieldKind k : {FieldKind::Park0, FieldKind::Park90}) {
    for (Cell a : A.anchors(k)) {
      t.fields.push_back({k, a});
      std::vector<int> cells;
      for (Cell c : A.footprint(k, a)) cells.push_back(grid.index(c));
      t.cells.push_back(cells);
      std::vector<int> acc;
      for (Cell d : A.access(k, a)) acc.push_back(g.node(d));
      t.access.push_back(acc);
    }
  }
  if (t.fields.size() > 64) throw LotError(ErrorCode::InstanceTooLarge, "more than 64 parking anchors");
  const size_t n = t.fields.size();
  t.conflict.assign(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      bool overlap = false;
      for (int c : t.cells[i]) overlap = overlap || std::find(t.cells[j].begin(), t.cells[j].end(), c) != t.cells[j].end();
      if (overlap) t.conflict[i] |= uint64_t(1) << j, t.conflict[j] |= uint64_t(1) << i;
    }
  return t;
}

struct Search {
  const GridSpec& grid;
  const AnchorSets& A;
  const DriveGraph& g;
  ParkingTable park;
  std::vector<std::vector<int>> drive_cells;  // grid indices per node
  OracleResult result;
  uint64_t best_drive = 0;
  uint64_t best_park = 0;

  Search(const GridSpec& gr, const AnchorSets& an, const DriveGraph& dg)
      : grid(gr), A(an), g(dg), park(parking_table(an, dg, gr)) {
    for (Cell c : g.nodes()) {
      std::vector<int> cells;
      for (Cell f : A.footprint(FieldKind::Drive, c)) cells.push_back(grid.index(f));
      drive_cells.push_back(cells);
    }
    result.optimum = -1;
  }

  void evaluate(uint64_t drive) {
    ++result.explored;
    std::vector<uint8_t> used(size_t(grid.size()), 0);
    for (uint64_t s = drive; s; s &= s - 1)
      for (int c : drive_cells[size_t(std::countr_zero(s))]) used[size_t(c)] = 1;
    uint64_t cand = 0;
    for (size_t i = 0; i < park.fields.size(); ++i) {
      bool free = true;
      for (int c : park.cells[i]) free = free && !used[size_t(c)];
      bool reach = false;
      for (int d : park.access[i]) reach = reach || (drive >> d & 1);
      if (free && reach) cand |= uint64_t(1) << i;
    }
    // cheap bound before the exact packing
    if (std::popcount(cand) <= result.optimum) return;
    Packer p{park.conflict};
    p.best = result.optimum;
    p.run(cand, 0, 0);
    if (p.best > result.optimum) {
      result.optimum = p.best;
      best_drive = drive;
      best_park = p.best_set;
    }
  }

  void finish() {
    Layout& L = result.witness;
    for (uint64_t s = best_drive; s; s &= s - 1) L.drive.push_back(g.cell(std::countr_zero(s)));
    for (uint64_t s = best_park; s; s &= s - 1) {
      auto [k, a] = park.fields[size_t(std::countr_zero(s))];
      (k == FieldKind::Park0 ? L.park0 : L.park90).push_back(a);
    }
    for (auto* v : {&L.drive, &L.park0, &L.park90}) std::sort(v->begin(), v->end());
    L.stall_count = int(L.park0.size() + L.park90.size());
    result.feasible = result.optimum >= 0;
    if (!result.feasible) result.optimum = 0;
  }
};

uint64_t node_mask(const DriveGraph& g, const std::vector<Cell>& cells) {
  uint64_t m = 0;
  for (Cell c : cells) m |= uint64_t(1) << g.node(c);
  return m;
}

}  // namespace

uint64_t max_packing(const std::vector<uint64_t>& conflict, uint64_t candidates) {
  Packer p{conflict};
  p.run(candidates, 0, 0);
  return p.best_set;
}

OracleResult brute_force_two_way(const GridSpec& grid_in, const FieldParams& params, const OracleLimits& limits) {
  GridSpec grid = grid_in;
  grid.mode = Mode::TwoWay;
  grid.exits.clear();
  canonicalize(grid);
  AnchorSets A = compute_anchor_sets(grid, params);
  DriveGraph g = build_drive_graph(A, grid);
  const int np = int(A.p0().size() + A.p90().size());
  if (g.num_nodes() > limits.max_drive_two_way || np > limits.max_parking_two_way)
    throw LotError(ErrorCode::InstanceTooLarge, "oracle limit: " + std::to_string(g.num_nodes()) + " drive anchors, " +
                                                    std::to_string(np) + " parking anchors");
  Search S(grid, A, g);
  std::vector<uint64_t> nb(size_t(g.num_nodes()), 0);
  for (int v = 0; v < g.num_nodes(); ++v)
    for (int w : g.neighbors(v)) nb[size_t(v)] |= uint64_t(1) << w;
  uint64_t required = node_mask(g, grid.entrances) | node_mask(g, grid.existing_drive);
  int root = g.node(grid.entrances.front());

  // each connected set containing root is reached exactly once: popped frontier nodes are banned
  // for the later siblings
  std::function<void(uint64_t, uint64_t, uint64_t)> grow = [&](uint64_t set, uint64_t frontier, uint64_t banned) {
    if ((set & required) == required) S.evaluate(set);
    while (frontier) {
      int v = std::countr_zero(frontier);
      uint64_t bit = uint64_t(1) << v;
      frontier &= ~bit;
      banned |= bit;
      uint64_t next = set | bit;
      grow(next, (frontier | nb[size_t(v)]) & ~next & ~banned, banned);
    }
  };
  uint64_t r = uint64_t(1) << root;
  grow(r, nb[size_t(root)] & ~r, r);
  S.finish();
  return S.result;
}

namespace {

// connected and bridgeless once the virtual edge entrance-exit is added; on success fills arcs
// with a strongly connected orientation in which the virtual edge runs entrance to exit
bool orientable(const DriveGraph& g, uint64_t set, int ent, int ex, std::vector<std::pair<int, int>>* arcs) {
  const int n = g.num_nodes();
  // undirected edge list restricted to set; the virtual edge is id 0
  std::vector<std::pair<int, int>> edges{{ent, ex}};
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
  adj[size_t(ent)].push_back({ex, 0});
  adj[size_t(ex)].push_back({ent, 0});
  for (int a = 0; a < g.num_arcs(); ++a) {
    auto [u, v] = g.arc(a);
    if (u < v && (set >> u & 1) && (set >> v & 1)) {
      int id = int(edges.size());
      edges.push_back({u, v});
      adj[size_t(u)].push_back({v, id});
      adj[size_t(v)].push_back({u, id});
    }
  }
  std::vector<int> disc(size_t(n), -1), low(size_t(n), 0);
  std::vector<std::pair<int, int>> oriented;
  std::vector<uint8_t> used(edges.size(), 0);
  int timer = 0;
  bool bridge = false;
  std::function<void(int, int)> dfs = [&](int u, int via) {
    disc[size_t(u)] = low[size_t(u)] = timer++;
    for (auto [w, id] : adj[size_t(u)]) {
      if (id == via || used[size_t(id)]) continue;
      used[size_t(id)] = 1;
      oriented.push_back({u, w});
      if (disc[size_t(w)] < 0) {
        dfs(w, id);
        low[size_t(u)] = std::min(low[size_t(u)], low[size_t(w)]);
        if (low[size_t(w)] > disc[size_t(u)]) bridge = true;
      } else {
        low[size_t(u)] = std::min(low[size_t(u)], disc[size_t(w)]);
      }
    }
  };
  dfs(ent, -1);
  for (uint64_t s = set; s; s &= s - 1)
    if (disc[size_t(std::countr_zero(s))] < 0) return false;
  if (bridge) return false;
  if (arcs) {
    bool flip = false;
    for (auto [u, w] : oriented)
      if ((u == ex && w == ent)) flip = true;
    arcs->clear();
    for (auto [u, w] : oriented) {
      if ((u == ent && w == ex) || (u == ex && w == ent)) continue;
      arcs->push_back(flip ? std::pair{w, u} : std::pair{u, w});
    }
  }
  return true;
}

}  // namespace

OracleResult brute_force_one_way(const GridSpec& grid_in, const FieldParams& params, const OracleLimits& limits) {
  GridSpec grid = grid_in;
  grid.mode = Mode::OneWay;
  canonicalize(grid);
  AnchorSets A = compute_anchor_sets(grid, params);
  DriveGraph g = build_drive_graph(A, grid);
  if (g.num_nodes() > limits.max_drive_one_way)
    throw LotError(ErrorCode::InstanceTooLarge, "oracle limit: " + std::to_string(g.num_nodes()) + " drive anchors");
  if (grid.exits.empty()) throw LotError(ErrorCode::InvalidInstance, "one-way instance needs an exit");
  Search S(grid, A, g);
  const int ent = g.node(grid.entrances.front()), ex = g.node(grid.exits.front());
  uint64_t required = node_mask(g, grid.entrances) | node_mask(g, grid.exits) | node_mask(g, grid.existing_drive);
  const uint64_t all = g.num_nodes() == 64 ? ~uint64_t(0) : (uint64_t(1) << g.num_nodes()) - 1;
  const uint64_t free = all & ~required;
  // walk every subset of the free nodes
  for (uint64_t sub = free;; sub = (sub - 1) & free) {
    uint64_t set = sub | required;
    if (orientable(g, set, ent, ex, nullptr)) S.evaluate(set);
    if (sub == 0) break;
  }
  S.finish();
  if (S.result.feasible) {
    std::vector<std::pair<int, int>> arcs;
    orientable(g, node_mask(g, S.result.witness.drive), ent, ex, &arcs);
    for (auto [u, w] : arcs) S.result.witness.directions.push_back({g.cell(u), g.cell(w)});
    std::sort(S.result.witness.directions.begin(), S.result.witness.directions.end());
  }
  return S.result;
}

}  // namespace lotforge
