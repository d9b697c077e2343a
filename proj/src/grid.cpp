#include "lotforge/grid.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "lotforge/error.hpp"

namespace lotforge {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::EntranceInvalid: return "EntranceInvalid";
    case ErrorCode::SourceNotInGraph: return "SourceNotInGraph";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::CellSizeNonPositive: return "CellSizeNonPositive";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
    case ErrorCode::ModelMalformed: return "ModelMalformed";
    case ErrorCode::NonIntegralAssignment: return "NonIntegralAssignment";
    case ErrorCode::EntranceEqualsExit: return "EntranceEqualsExit";
    case ErrorCode::FewerThanTwoEntrances: return "FewerThanTwoEntrances";
    case ErrorCode::NoSeparatorExists: return "NoSeparatorExists";
    case ErrorCode::CutContainsHeavyArc: return "CutContainsHeavyArc";
    case ErrorCode::BudgetNonPositive: return "BudgetNonPositive";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

int FieldParams::height(FieldKind k) const {
  switch (k) {
    case FieldKind::Park0: return omega;
    case FieldKind::Park90: return ell;
    case FieldKind::Drive: return delta;
  }
  return 0;
}

int FieldParams::width(FieldKind k) const {
  switch (k) {
    case FieldKind::Park0: return ell;
    case FieldKind::Park90: return omega;
    case FieldKind::Drive: return delta;
  }
  return 0;
}

std::vector<uint8_t> GridSpec::blocked_mask() const {
  std::vector<uint8_t> m(size_t(std::max(0, size())), 0);
  for (Cell c : blocked)
    if (in_range(c)) m[index(c)] = 1;
  return m;
}

void validate_instance(const GridSpec& grid, const FieldParams& params) {
  auto fail = [](const std::string& msg) { throw LotError(ErrorCode::InvalidInstance, msg); };
  if (grid.mu <= 0 || grid.nu <= 0) fail("grid dimensions must be positive");
  if (params.omega < 1 || params.ell < 1) fail("omega and ell must be >= 1");
  if (params.delta < params.omega) fail("delta must be >= omega");
  if (grid.mode == Mode::TwoWay && params.delta < 2 * params.omega)
    fail("two-way mode requires delta >= 2*omega");
  if (grid.entrances.empty()) fail("at least one entrance is required");
  if (grid.mode == Mode::OneWay && grid.exits.empty()) fail("one-way mode requires an exit");

  auto blocked = grid.blocked_mask();
  auto check = [&](const std::vector<Cell>& cells, const char* what, bool allow_blocked) {
    for (Cell c : cells) {
      if (!grid.in_range(c)) fail(std::string(what) + " cell out of range " + cell_str(c));
      if (!allow_blocked && blocked[grid.index(c)])
        fail(std::string(what) + " cell is blocked " + cell_str(c));
    }
  };
  check(grid.blocked, "blocked", true);
  check(grid.existing_drive, "existing_drive", false);
  check(grid.entrances, "entrance", false);
  check(grid.exits, "exit", false);
  for (Cell e : grid.entrances)
    if (std::find(grid.exits.begin(), grid.exits.end(), e) != grid.exits.end())
      throw LotError(ErrorCode::EntranceEqualsExit, "cell " + cell_str(e) + " is both entrance and exit");
}

void canonicalize(GridSpec& grid) {
  for (auto* v : {&grid.blocked, &grid.existing_drive, &grid.entrances, &grid.exits}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
}

AnchorSets::AnchorSets(const GridSpec& grid, const FieldParams& params)
    : mu_(grid.mu), nu_(grid.nu), params_(params) {
  const int n = mu_ * nu_;
  auto blocked = grid.blocked_mask();

  // prefix sums of blocked cells give O(1) footprint checks
  std::vector<int> pre(size_t((mu_ + 1) * (nu_ + 1)), 0);
  auto P = [&](int r, int c) -> int& { return pre[size_t(r * (nu_ + 1) + c)]; };
  for (int r = 0; r < mu_; ++r)
    for (int c = 0; c < nu_; ++c)
      P(r + 1, c + 1) = P(r, c + 1) + P(r + 1, c) - P(r, c) + blocked[size_t(r * nu_ + c)];

  for (int k = 0; k < 3; ++k) {
    auto kind = FieldKind(k);
    const int h = params_.height(kind), w = params_.width(kind);
    valid_[k].assign(size_t(n), 0);
    inverse_[k].assign(size_t(n), {});
    for (int r = 0; r + h <= mu_; ++r) {
      for (int c = 0; c + w <= nu_; ++c) {
        int cnt = P(r + h, c + w) - P(r, c + w) - P(r + h, c) + P(r, c);
        if (cnt != 0) continue;
        valid_[k][size_t(r * nu_ + c)] = 1;
        anchors_[k].push_back({r, c});
      }
    }
    for (Cell a : anchors_[k])
      for (int dr = 0; dr < h; ++dr)
        for (int dc = 0; dc < w; ++dc) inverse_[k][size_t(idx({a.row + dr, a.col + dc}))].push_back(a);
    for (auto& v : inverse_[k]) std::sort(v.begin(), v.end());
  }

  const int om = params_.omega, el = params_.ell, de = params_.delta;
  for (int k = 0; k < 2; ++k) {
    auto kind = FieldKind(k);
    access_[k].assign(size_t(n), {});
    for (Cell a : anchors_[k]) {
      auto& out = access_[k][size_t(idx(a))];
      const int h = params_.height(kind), w = params_.width(kind);
      // short edges of a 0-degree field are its left/right sides when omega < ell,
      // of a 90-degree field its top/bottom sides
      bool vertical_edges = (kind == FieldKind::Park0) ? (om <= el) : (om >= el);
      bool horizontal_edges = (kind == FieldKind::Park0) ? (om >= el) : (om <= el);
      auto add = [&](Cell c) {
        if (in_range(c) && valid_[2][size_t(idx(c))]) out.push_back(c);
      };
      if (vertical_edges) {
        for (int m = a.row + h - de; m <= a.row; ++m) {
          add({m, a.col - de});
          add({m, a.col + w});
        }
      }
      if (horizontal_edges) {
        for (int c = a.col + w - de; c <= a.col; ++c) {
          add({a.row - de, c});
          add({a.row + h, c});
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  }
}

bool AnchorSets::valid(FieldKind k, Cell a) const {
  return in_range(a) && valid_[int(k)][size_t(idx(a))];
}

const std::vector<Cell>& AnchorSets::covering(FieldKind k, Cell c) const {
  static const std::vector<Cell> empty;
  if (!in_range(c)) return empty;
  return inverse_[int(k)][size_t(idx(c))];
}

const std::vector<Cell>& AnchorSets::access(FieldKind k, Cell a) const {
  static const std::vector<Cell> empty;
  if (k == FieldKind::Drive || !in_range(a)) return empty;
  return access_[int(k)][size_t(idx(a))];
}

std::vector<Cell> AnchorSets::footprint(FieldKind k, Cell a) const {
  std::vector<Cell> out;
  for (int dr = 0; dr < params_.height(k); ++dr)
    for (int dc = 0; dc < params_.width(k); ++dc) out.push_back({a.row + dr, a.col + dc});
  return out;
}

AnchorSets compute_anchor_sets(const GridSpec& grid, const FieldParams& params) {
  validate_instance(grid, params);
  AnchorSets a(grid, params);
  auto need = [&](const std::vector<Cell>& cells, const char* what) {
    for (Cell c : cells)
      if (!a.valid(FieldKind::Drive, c))
        throw LotError(ErrorCode::EntranceInvalid,
                       std::string(what) + " " + cell_str(c) + " is not a valid drive anchor");
  };
  need(grid.entrances, "entrance");
  need(grid.exits, "exit");
  need(grid.existing_drive, "existing drive");
  return a;
}

DriveGraph::DriveGraph(const AnchorSets& anchors, const GridSpec& grid)
    : mu_(anchors.mu()), nu_(anchors.nu()), nodes_(anchors.d()) {
  node_of_.assign(size_t(mu_ * nu_), -1);
  for (int i = 0; i < num_nodes(); ++i) node_of_[size_t(nodes_[i].row * nu_ + nodes_[i].col)] = i;

  std::vector<uint8_t> is_entrance(size_t(mu_ * nu_), 0), is_exit(size_t(mu_ * nu_), 0);
  if (grid.mode == Mode::OneWay) {
    for (Cell c : grid.entrances) is_entrance[size_t(c.row * nu_ + c.col)] = 1;
    for (Cell c : grid.exits) is_exit[size_t(c.row * nu_ + c.col)] = 1;
  }
  auto terminal_pair = [&](Cell a, Cell b) {
    size_t ia = size_t(a.row * nu_ + a.col), ib = size_t(b.row * nu_ + b.col);
    return (is_entrance[ia] && is_exit[ib]) || (is_exit[ia] && is_entrance[ib]);
  };

  dir_arc_.assign(nodes_.size(), {-1, -1, -1, -1});
  out_.assign(nodes_.size(), {});
  in_.assign(nodes_.size(), {});
  adj_.assign(nodes_.size(), {});
  for (int u = 0; u < num_nodes(); ++u) {
    Cell c = nodes_[u];
    for (int d = 0; d < 4; ++d) {
      Cell nb{c.row + kDirRow[d], c.col + kDirCol[d]};
      int v = node(nb);
      if (v < 0 || terminal_pair(c, nb)) continue;
      dir_arc_[u][d] = int(arcs_.size());
      out_[u].push_back(int(arcs_.size()));
      in_[v].push_back(int(arcs_.size()));
      adj_[u].push_back(v);
      arcs_.push_back({u, v});
    }
  }
}

int DriveGraph::node(Cell c) const {
  if (c.row < 0 || c.col < 0 || c.row >= mu_ || c.col >= nu_) return -1;
  return node_of_[size_t(c.row * nu_ + c.col)];
}

int DriveGraph::arc_between(int u, int v) const {
  for (int a : out_[u])
    if (arcs_[a].head == v) return a;
  return -1;
}

DriveGraph build_drive_graph(const AnchorSets& anchors, const GridSpec& grid) {
  return DriveGraph(anchors, grid);
}

std::vector<int> bfs_distances(const DriveGraph& g, const std::vector<int>& sources,
                               const std::vector<uint8_t>& removed) {
  std::vector<int> dist(size_t(g.num_nodes()), -1);
  std::deque<int> q;
  for (int s : sources) {
    if (!removed.empty() && removed[s]) continue;
    if (dist[s] < 0) {
      dist[s] = 0;
      q.push_back(s);
    }
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.neighbors(u)) {
      if (dist[v] >= 0 || (!removed.empty() && removed[v])) continue;
      dist[v] = dist[u] + 1;
      q.push_back(v);
    }
  }
  return dist;
}

std::vector<std::vector<Cell>> hop_rings(const DriveGraph& g, Cell source) {
  int s = g.node(source);
  if (s < 0) throw LotError(ErrorCode::SourceNotInGraph, "hop ring source " + cell_str(source));
  auto dist = bfs_distances(g, {s});
  std::vector<std::vector<Cell>> rings;
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (dist[v] < 0) continue;
    if (int(rings.size()) <= dist[v]) rings.resize(size_t(dist[v] + 1));
    rings[size_t(dist[v])].push_back(g.cell(v));
  }
  return rings;
}

std::vector<int> components(const DriveGraph& g, const std::vector<uint8_t>& mask, int* count) {
  std::vector<int> comp(size_t(g.num_nodes()), -1);
  int k = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.num_nodes(); ++s) {
    if (!mask[s] || comp[s] >= 0) continue;
    comp[s] = k;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (mask[v] && comp[v] < 0) {
          comp[v] = k;
          stack.push_back(v);
        }
      }
    }
    ++k;
  }
  if (count) *count = k;
  return comp;
}

}  // namespace lotforge
