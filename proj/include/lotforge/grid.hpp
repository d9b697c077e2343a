#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace lotforge {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

enum class Mode { TwoWay, OneWay };

enum class FieldKind { Park0 = 0, Park90 = 1, Drive = 2 };

struct FieldParams {
  int omega = 1;
  int ell = 2;
  int delta = 2;

  int height(FieldKind k) const;
  int width(FieldKind k) const;
};

struct GridSpec {
  int mu = 0;
  int nu = 0;
  std::vector<Cell> blocked;
  std::vector<Cell> existing_drive;
  std::vector<Cell> entrances;
  std::vector<Cell> exits;
  Mode mode = Mode::TwoWay;

  bool in_range(Cell c) const { return c.row >= 0 && c.col >= 0 && c.row < mu && c.col < nu; }
  int index(Cell c) const { return c.row * nu + c.col; }
  Cell cell(int idx) const { return {idx / nu, idx % nu}; }
  int size() const { return mu * nu; }
  std::vector<uint8_t> blocked_mask() const;
};

struct Instance {
  GridSpec grid;
  FieldParams params;
};

// throws LotError(InvalidInstance) on any type-level violation
void validate_instance(const GridSpec& grid, const FieldParams& params);

// sorts and dedups every cell list so equal instances compare equal
void canonicalize(GridSpec& grid);

class AnchorSets {
 public:
  AnchorSets() = default;
  AnchorSets(const GridSpec& grid, const FieldParams& params);

  int mu() const { return mu_; }
  int nu() const { return nu_; }
  const FieldParams& params() const { return params_; }

  const std::vector<Cell>& anchors(FieldKind k) const { return anchors_[int(k)]; }
  const std::vector<Cell>& p0() const { return anchors_[0]; }
  const std::vector<Cell>& p90() const { return anchors_[1]; }
  const std::vector<Cell>& d() const { return anchors_[2]; }

  bool valid(FieldKind k, Cell a) const;

  // anchors of kind k whose footprint covers c
  const std::vector<Cell>& covering(FieldKind k, Cell c) const;
  const std::vector<Cell>& inv_p0(Cell c) const { return covering(FieldKind::Park0, c); }
  const std::vector<Cell>& inv_p90(Cell c) const { return covering(FieldKind::Park90, c); }
  const std::vector<Cell>& inv_d(Cell c) const { return covering(FieldKind::Drive, c); }

  // drive anchors abutting a short edge of the parking field at a
  const std::vector<Cell>& access(FieldKind k, Cell a) const;
  const std::vector<Cell>& n0(Cell a) const { return access(FieldKind::Park0, a); }
  const std::vector<Cell>& n90(Cell a) const { return access(FieldKind::Park90, a); }

  std::vector<Cell> footprint(FieldKind k, Cell a) const;

 private:
  int idx(Cell c) const { return c.row * nu_ + c.col; }
  bool in_range(Cell c) const { return c.row >= 0 && c.col >= 0 && c.row < mu_ && c.col < nu_; }

  int mu_ = 0;
  int nu_ = 0;
  FieldParams params_;
  std::array<std::vector<Cell>, 3> anchors_;
  std::array<std::vector<uint8_t>, 3> valid_;
  std::array<std::vector<std::vector<Cell>>, 3> inverse_;
  std::array<std::vector<std::vector<Cell>>, 2> access_;
};

// validates the instance and checks every terminal and existing drive is a drive anchor
AnchorSets compute_anchor_sets(const GridSpec& grid, const FieldParams& params);

struct Arc {
  int tail = -1;
  int head = -1;
  auto operator<=>(const Arc&) const = default;
};

enum Direction { Up = 0, Left = 1, Right = 2, Down = 3 };
inline constexpr std::array<int, 4> kDirRow = {-1, 0, 0, 1};
inline constexpr std::array<int, 4> kDirCol = {0, -1, 1, 0};

class DriveGraph {
 public:
  DriveGraph() = default;
  DriveGraph(const AnchorSets& anchors, const GridSpec& grid);

  int num_nodes() const { return int(nodes_.size()); }
  int num_arcs() const { return int(arcs_.size()); }
  const std::vector<Cell>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  Cell cell(int node) const { return nodes_[node]; }
  const Arc& arc(int a) const { return arcs_[a]; }
  Cell tail_cell(int a) const { return nodes_[arcs_[a].tail]; }
  Cell head_cell(int a) const { return nodes_[arcs_[a].head]; }

  // -1 when c is not a node
  int node(Cell c) const;
  bool contains(Cell c) const { return node(c) >= 0; }
  // -1 when absent
  int arc_between(int u, int v) const;
  int arc_in_direction(int u, Direction d) const { return dir_arc_[u][d]; }
  int reverse(int a) const { return arc_between(arcs_[a].head, arcs_[a].tail); }

  const std::vector<int>& out_arcs(int u) const { return out_[u]; }
  const std::vector<int>& in_arcs(int u) const { return in_[u]; }
  // undirected neighbours (nodes joined by an arc in either direction)
  const std::vector<int>& neighbors(int u) const { return adj_[u]; }

 private:
  int mu_ = 0;
  int nu_ = 0;
  std::vector<Cell> nodes_;
  std::vector<Arc> arcs_;
  std::vector<int> node_of_;
  std::vector<std::array<int, 4>> dir_arc_;
  std::vector<std::vector<int>> out_, in_, adj_;
};

DriveGraph build_drive_graph(const AnchorSets& anchors, const GridSpec& grid);

// undirected BFS distances from a set of sources; -1 for unreachable or removed nodes.
// removed may be empty.
std::vector<int> bfs_distances(const DriveGraph& g, const std::vector<int>& sources,
                               const std::vector<uint8_t>& removed = {});

// ring d = nodes at exact hop distance d from source
std::vector<std::vector<Cell>> hop_rings(const DriveGraph& g, Cell source);

// connected components of the subgraph induced by mask; component id per node, -1 outside
std::vector<int> components(const DriveGraph& g, const std::vector<uint8_t>& mask, int* count);

}  // namespace lotforge
