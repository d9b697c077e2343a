#pragma once

#include <cstdint>
#include <vector>

#include "lotforge/formulations.hpp"
#include "lotforge/grid.hpp"
#include "lotforge/model.hpp"

namespace lotforge {

// node ids of a DriveGraph; the three sets partition the nodes
struct VertexSeparator {
  std::vector<int> cut_nodes;
  std::vector<int> near_side;  // reachable from the source set once the cut is removed
  std::vector<int> far_side;
};

struct EdgeCut {
  std::vector<int> cut_arcs;
  std::vector<int> source_side;
  std::vector<int> sink_side;
};

// minimum-cardinality node set (outside both contracted sets) separating them, shrunk to the
// boundary of the sink-side component. Throws NoSeparatorExists when the sets touch.
VertexSeparator min_vertex_cut(const DriveGraph& g, const std::vector<int>& source_set,
                               const std::vector<int>& sink_set);

// min s-t cut with weight heavy on z-active arcs, 1 elsewhere, infinite on seed arcs.
// Throws CutContainsHeavyArc if the cheapest cut still has to cross an active arc.
EdgeCut min_weighted_edge_cut(const DriveGraph& g, const std::vector<uint8_t>& z_active,
                              const std::vector<int>& source_seed, const std::vector<int>& sink_seed);

// BFS certificates
bool separates(const DriveGraph& g, const VertexSeparator& sep);
bool separates(const DriveGraph& g, const EdgeCut& cut);

// y(cell) + sum of parking variables covering cell whose access set lies inside `inside`
// (a node mask), minus rhs_vars; sense <= 0
LinearConstraint connectivity_row(const AnchorSets& anchors, const DriveGraph& g, const VarIndex& vars, int cell,
                                  const std::vector<uint8_t>& inside, const std::vector<int>& rhs_vars, Tag tag);

// parking variables of the row that are not justified by `inside`; empty when sound
std::vector<int> unsound_parking_terms(const AnchorSets& anchors, const DriveGraph& g, const ModelIR& model,
                                       const LinearConstraint& row, const std::vector<uint8_t>& inside);

std::vector<LinearConstraint> forward_hop_inequalities(const DriveGraph& g, const AnchorSets& anchors,
                                                       const VarIndex& vars, const std::vector<int>& roots,
                                                       const HopConfig& cfg);

std::vector<LinearConstraint> reverse_hop_inequalities(const DriveGraph& g, const AnchorSets& anchors,
                                                       const VarIndex& vars, const std::vector<int>& roots,
                                                       const HopConfig& cfg);

std::vector<LinearConstraint> dead_end_prevention(const DriveGraph& g, const VarIndex& vars, const Terminals& terms);

struct SeparationOptions {
  bool cut_per_cell = true;            // false: one row per stranded component
  bool per_component_edge_cuts = false;
  bool verify = true;
};

struct SeparationStats {
  int calls = 0;
  int cuts = 0;
  int separators = 0;
  int separator_failures = 0;
  int nonviolated_cuts = 0;
  int unsound_rows = 0;
};

std::vector<LinearConstraint> separate_two_way(const Formulation& form, const std::vector<double>& x,
                                               const SeparationOptions& opts, SeparationStats* stats);

std::vector<LinearConstraint> separate_one_way(const Formulation& form, const std::vector<double>& x,
                                               const SeparationOptions& opts, SeparationStats* stats);

}  // namespace lotforge
