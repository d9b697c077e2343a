#pragma once

#include <random>
#include <vector>

#include "lotforge/grid.hpp"

namespace lotforge::testing {

inline Instance open_instance(int rows, int cols, Mode mode, int delta, std::vector<Cell> entrances,
                              std::vector<Cell> exits = {}, std::vector<Cell> blocked = {}) {
  Instance I;
  I.grid.mu = rows;
  I.grid.nu = cols;
  I.grid.mode = mode;
  I.grid.entrances = std::move(entrances);
  I.grid.exits = std::move(exits);
  I.grid.blocked = std::move(blocked);
  I.params.delta = delta;
  canonicalize(I.grid);
  return I;
}

// small random two-way instance with a boundary entrance; empty optional-like flag when
// the blocked draw leaves no boundary anchor
inline bool random_two_way(std::mt19937_64& rng, int max_side, double max_rate, Instance& out) {
  Instance I;
  I.grid.mu = 2 + int(rng() % uint64_t(max_side - 1));
  I.grid.nu = 2 + int(rng() % uint64_t(max_side - 1));
  double rate = std::uniform_real_distribution<double>(0, max_rate)(rng);
  for (int r = 0; r < I.grid.mu; ++r)
    for (int c = 0; c < I.grid.nu; ++c)
      if (std::uniform_real_distribution<double>(0, 1)(rng) < rate) I.grid.blocked.push_back({r, c});
  AnchorSets A(I.grid, I.params);
  std::vector<Cell> boundary;
  for (Cell a : A.d())
    if (a.row == 0 || a.col == 0 || a.row + 2 == I.grid.mu || a.col + 2 == I.grid.nu) boundary.push_back(a);
  if (boundary.empty()) return false;
  I.grid.entrances = {boundary[rng() % boundary.size()]};
  canonicalize(I.grid);
  out = I;
  return true;
}

// small random one-way instance (delta 1), entrance anywhere, exit next to it
inline bool random_one_way(std::mt19937_64& rng, int rows, int cols, int max_drive, Instance& out) {
  Instance I;
  I.params.delta = 1;
  I.grid.mode = Mode::OneWay;
  I.grid.mu = rows;
  I.grid.nu = cols;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rng() % 100 < 25) I.grid.blocked.push_back({r, c});
  AnchorSets A(I.grid, I.params);
  if (A.d().size() < 3 || int(A.d().size()) > max_drive) return false;
  Cell e = A.d()[rng() % A.d().size()];
  std::vector<Cell> nb;
  for (int k = 0; k < 4; ++k) {
    Cell c{e.row + kDirRow[size_t(k)], e.col + kDirCol[size_t(k)]};
    if (A.valid(FieldKind::Drive, c)) nb.push_back(c);
  }
  if (nb.empty()) return false;
  I.grid.entrances = {e};
  I.grid.exits = {nb[rng() % nb.size()]};
  canonicalize(I.grid);
  out = I;
  return true;
}

}  // namespace lotforge::testing
