#pragma once

#include <set>
#include <string>
#include <vector>

#include "lotforge/grid.hpp"
#include "lotforge/model.hpp"

namespace lotforge {

enum class Variant { FlowBased, FlowWithVIs, CutBased };
enum class TurnOption { Off, Uniform, NoSharp, NoOppositeOverlap, MinSegment };
enum class MultiEntrance { Single, Connected, Disjoint };

struct FormulationKind {
  Variant variant = Variant::FlowBased;
  Mode mode = Mode::TwoWay;
  TurnOption turn = TurnOption::Off;
  MultiEntrance multi = MultiEntrance::Single;
};

const char* to_string(Variant v);
const char* to_string(TurnOption t);
const char* to_string(MultiEntrance m);
const char* to_string(Mode m);

struct HopConfig {
  // a hop row is regular when its depth or its right-hand side is small, lazy otherwise
  int regular_max_depth = 3;
  int regular_max_rhs = 8;
  bool forward = true;
  bool reverse = true;
};

struct FormulationOptions {
  HopConfig hop;
  // z <= f and z <= g lower links on the one-way flow model. They forbid arcs out of the
  // entrance and into the exit, which the cut model allows, so they are off by default.
  bool direction_lower_links = false;
};

// which drive nodes play the entrance and exit roles
struct Terminals {
  std::vector<int> roots;         // flow sink / cut root: every active drive must reach one
  std::vector<int> exit_sources;  // one-way: every active drive must be reachable from one
  std::vector<int> fixed_active;  // y fixed to 1
};

Terminals resolve_terminals(const GridSpec& grid, const DriveGraph& graph, MultiEntrance option);

// variable index per anchor cell (grid index) and per arc; -1 when absent
struct VarIndex {
  std::vector<int> x0, x90, y;
  std::vector<int> f, g, z;
  int nu = 0;

  int park(FieldKind k, Cell c) const { return (k == FieldKind::Park0 ? x0 : x90)[size_t(c.row * nu + c.col)]; }
  int drive(Cell c) const { return y[size_t(c.row * nu + c.col)]; }
};

struct Formulation {
  Instance instance;
  FormulationKind kind;
  FormulationOptions options;
  AnchorSets anchors;
  DriveGraph graph;
  Terminals terminals;
  VarIndex vars;
  ModelIR model;
};

// ---- emitters; each returns rows over the variables in vars ----

std::vector<LinearConstraint> emit_single_purpose(const AnchorSets& anchors, const VarIndex& vars);

// rows for anchors with access; anchors with an empty access set are returned in zero_fixed
std::vector<LinearConstraint> emit_accessibility(const AnchorSets& anchors, const VarIndex& vars,
                                                 std::vector<int>* zero_fixed);

// conservation toward the roots plus the big-M forcing rows when forcing is set
std::vector<LinearConstraint> emit_two_way_flow(const DriveGraph& graph, const VarIndex& vars,
                                                const std::vector<int>& roots, bool forcing);

std::vector<LinearConstraint> emit_one_way_flow(const DriveGraph& graph, const VarIndex& vars,
                                                const Terminals& terms, bool forcing, bool lower_links);

std::vector<LinearConstraint> emit_turn_restrictions(const AnchorSets& anchors, const DriveGraph& graph,
                                                     const VarIndex& vars, TurnOption option);

// (f+g) out equals (f+g) in at every non-terminal drive node
bool balance_identity_holds(const Formulation& form, const std::vector<double>& x, double tol = 1e-6);

// row deduplication by canonical term list
class RowSet {
 public:
  // false when an identical row was inserted before
  bool insert(const LinearConstraint& c);

 private:
  struct Key {
    std::vector<std::pair<int, long long>> terms;
    int sense = 0;
    long long rhs = 0;
    auto operator<=>(const Key&) const = default;
  };
  std::set<Key> keys_;
};

Formulation build_formulation(const Instance& instance, const FormulationKind& kind,
                              const FormulationOptions& options = {});

}  // namespace lotforge
