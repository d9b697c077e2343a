#pragma once

#include <optional>
#include <vector>

#include "lotforge/formulations.hpp"
#include "lotforge/model.hpp"

namespace lotforge {

// every row (lazy ones included), every fixing and every bound within tol
bool satisfies_all_rows(const ModelIR& model, const std::vector<double>& x, double tol = 1e-6);

// binaries and z arcs of the layout plus flows routed along BFS trees: f toward the roots,
// g out of the exit sources. Flow entries are left at 0 for the cut formulation.
std::vector<double> complete_assignment(const Formulation& form, const Layout& layout);

struct HeuristicOptions {
  std::vector<double> thresholds = {0.5, 0.25, 0.75, 0.1};
  int improve_passes = 2;
};

// rounds the drive part of an LP point, repairs connectivity (two-way) or orientability
// (one-way), packs parking greedily by LP value, then tries single drive-field removals.
// Returns a point satisfying every row of the model, or nothing.
std::optional<std::vector<double>> round_to_layout(const Formulation& form, const std::vector<double>& lp_x,
                                                   const HeuristicOptions& opts = {});

}  // namespace lotforge
