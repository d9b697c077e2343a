#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lotforge/formulations.hpp"
#include "lotforge/grid.hpp"
#include "lotforge/model.hpp"
#include "lotforge/separation.hpp"

namespace lotforge {

enum class SolveStatus { Optimal, Feasible, Infeasible, TimeLimit };
const char* to_string(SolveStatus s);

struct RoundRecord {
  int round = 0;
  int cuts_added = 0;
  std::optional<int> lb;
  std::optional<double> ub;
  double elapsed_s = 0;
};

struct SolveOptions {
  double time_limit_s = 900;
  std::string backend;  // empty: LOTFORGE_BACKEND or the default
  bool force_outer_loop = false;
  bool backend_cuts = true;
  // LP rounding heuristic at branch-and-bound nodes
  bool heuristic = true;
  bool verbose = false;
  int seed = 1;
  FormulationOptions formulation;
  SeparationOptions separation;
  std::function<void(const RoundRecord&)> on_round;
};

struct SolveStats {
  double wall_time_s = 0;
  double build_time_s = 0;
  int cut_rounds = 0;
  int user_cuts = 0;
  long backend_nodes = 0;
  int lazy_rows_added = 0;
  int rejected_incumbents = 0;
  int heuristic_calls = 0;
  int heuristic_solutions = 0;
  int num_variables = 0;
  int num_constraints = 0;
  int num_lazy_constraints = 0;
  std::map<std::string, int> constraint_counts;
  SeparationStats separation;
  // outer loop only: every bound seen per round, for monotonicity checks
  std::vector<double> ub_trace;
  std::vector<int> lb_trace;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<int> lower_bound;
  std::optional<double> upper_bound;
  std::optional<double> gap;
  std::optional<Layout> layout;
  SolveStats stats;
  std::vector<double> assignment;
  // rows generated by separation, each paired with the incumbent that produced it
  std::vector<std::pair<LinearConstraint, std::vector<double>>> cut_log;
};

// (UB-LB)/LB; 0 when equal; empty when LB is 0 and UB positive
std::optional<double> relative_gap(std::optional<int> lb, std::optional<double> ub);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// combinatorial re-check of a layout against the instance
ValidationReport validate_layout(const Layout& layout, const Instance& instance, Mode mode,
                                 MultiEntrance multi = MultiEntrance::Single, TurnOption turn = TurnOption::Off);

// binary assignment for the formulation's variables reproducing the layout (flows left at 0)
std::vector<double> assignment_from_layout(const Formulation& form, const Layout& layout);

SolveResult solve_formulation(const Formulation& form, const SolveOptions& opts);
SolveResult solve_instance(const Instance& instance, const FormulationKind& kind, const SolveOptions& opts);

// max distance of any flow value from the nearest integer after fixing the binaries of x and
// re-solving the flow LP; negative when the LP fails
double flow_integrality_residual(const Formulation& form, const std::vector<double>& x, const std::string& backend = "");

struct BenchRow {
  std::string instance;
  FormulationKind kind;
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<int> lb;
  std::optional<double> ub;
  std::optional<double> gap;
  double time_s = 0;
  int cuts = 0;
  int group = 0;  // 1: every kind optimal on this instance, 2: otherwise
};

struct BenchSummary {
  FormulationKind kind;
  int group = 0;  // 0 for all instances
  int instances = 0;
  int optimal = 0;
  double median_time_s = 0;
  double mean_time_s = 0;
  std::optional<double> mean_gap;
  std::optional<double> median_gap;
};

struct BenchTable {
  std::vector<BenchRow> rows;
  std::vector<BenchSummary> summaries;
};

BenchTable compare_formulations(const std::vector<std::pair<std::string, Instance>>& instances,
                                const std::vector<FormulationKind>& kinds, const SolveOptions& opts, int workers = 1);

}  // namespace lotforge
