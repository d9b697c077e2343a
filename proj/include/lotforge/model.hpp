#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lotforge/grid.hpp"

namespace lotforge {

enum class VarKind { Park0, Park90, Drive, FlowF, FlowG, DirZ };
enum class Domain { Binary, Continuous };

struct VarRef {
  VarKind kind = VarKind::Drive;
  Cell a;
  Cell b;  // arc head for FlowF/FlowG/DirZ, unused otherwise
  auto operator<=>(const VarRef&) const = default;
};

struct VarRefHash {
  size_t operator()(const VarRef& r) const {
    size_t h = size_t(r.kind);
    for (int v : {r.a.row, r.a.col, r.b.row, r.b.col}) h = h * 1000003u + size_t(v + 7);
    return h;
  }
};

struct Variable {
  VarRef ref;
  Domain domain = Domain::Binary;
  double lb = 0;
  double ub = 1;
};

enum class Sense { Le, Ge, Eq };

enum class Tag {
  SinglePurpose,
  Accessibility,
  Flow,
  FlowForcing,
  DirectionLink,
  DirectionEndpoint,
  AntiParallel,
  HopForward,
  HopReverse,
  DeadEnd,
  Turn,
  FeasibilityCut,
};

const char* to_string(Tag t);
const char* to_string(VarKind k);

struct Term {
  double coef = 0;
  int var = -1;
};

struct LinearConstraint {
  std::vector<Term> terms;
  Sense sense = Sense::Le;
  double rhs = 0;
  Tag tag = Tag::SinglePurpose;
  bool lazy = false;

  double activity(const std::vector<double>& x) const;
  // amount by which x violates the row (<= 0 when satisfied)
  double violation(const std::vector<double>& x) const;
  bool violated(const std::vector<double>& x, double tol = 1e-6) const { return violation(x) > tol; }
};

class ModelIR {
 public:
  int add_variable(const VarRef& ref, Domain domain, double ub);
  // -1 when absent
  int find(const VarRef& ref) const;
  void add(LinearConstraint c);
  void fix(int var, double value);

  const std::vector<Variable>& variables() const { return vars_; }
  const Variable& variable(int i) const { return vars_[size_t(i)]; }
  int num_variables() const { return int(vars_.size()); }
  const std::vector<LinearConstraint>& constraints() const { return cons_; }
  const std::map<int, double>& fixings() const { return fixings_; }
  // maximize: 1 for every parking variable, 0 otherwise
  double objective_coef(int var) const;
  double objective(const std::vector<double>& x) const;

  std::map<Tag, int> tag_counts() const;
  // throws ModelMalformed
  void check() const;
  // CPLEX-LP-like dump with tag comments
  void write_lp(std::ostream& os) const;
  std::string var_name(int var) const;

 private:
  std::vector<Variable> vars_;
  std::unordered_map<VarRef, int, VarRefHash> index_;
  std::vector<LinearConstraint> cons_;
  std::map<int, double> fixings_;
};

struct ArcFlow {
  Cell from;
  Cell to;
  double f = 0;
  double g = 0;
};

struct Layout {
  std::vector<Cell> park0;
  std::vector<Cell> park90;
  std::vector<Cell> drive;
  std::vector<std::pair<Cell, Cell>> directions;
  int stall_count = 0;
  std::vector<ArcFlow> flows;  // diagnostics only

  bool operator==(const Layout& o) const {
    return park0 == o.park0 && park90 == o.park90 && drive == o.drive && directions == o.directions &&
           stall_count == o.stall_count;
  }
};

// throws NonIntegralAssignment when a binary is fractional beyond tol, Internal when a
// direction arc has an inactive endpoint
Layout extract_layout(const ModelIR& model, const std::vector<double>& x, double tol = 1e-6);

// ---- backend contract ----

enum class BackendStatus { Optimal, Feasible, Infeasible, NoSolution, Error };

struct BackendOptions {
  double time_limit_s = 900;
  int seed = 1;
  bool verbose = false;
  // rounding/feasibility-pump heuristics; only safe when every lazy family is implied
  // by the regular rows
  bool allow_heuristics = false;
  // false: lazy rows are loaded up front and no callback is installed
  bool native_lazy = true;
  // backend-native cutting planes (GLPK: mir, cover, clique)
  bool backend_cuts = true;
};

struct SearchState {
  double bound = 0;                 // best known upper bound
  std::optional<double> incumbent;  // objective of the best accepted point, if any
};

// candidate integer point in, rows that cut it off out; empty means accepted
using IncumbentCallback =
    std::function<std::vector<LinearConstraint>(const std::vector<double>& x, const SearchState& state)>;

// node LP point in, a complete feasible point out (every row, lazy ones included), or nothing
using HeuristicCallback =
    std::function<std::optional<std::vector<double>>(const std::vector<double>& lp_x, const SearchState& state)>;

struct BackendStats {
  long nodes = 0;
  int heuristic_calls = 0;
  int heuristic_solutions = 0;
  int lazy_rows_added = 0;
  int callback_calls = 0;
  int rejected_candidates = 0;
};

struct BackendResult {
  BackendStatus status = BackendStatus::Error;
  std::vector<double> x;
  double objective = 0;
  double bound = 0;
  BackendStats stats;
  std::vector<LinearConstraint> generated;  // every row added through the callback
};

struct LpResult {
  bool optimal = false;
  double objective = 0;
  std::vector<double> x;
};

class MipBackend {
 public:
  virtual ~MipBackend() = default;
  virtual std::string name() const = 0;
  virtual bool supports_lazy() const = 0;
  // lazy rows of the model are kept out of the initial relaxation and enforced through the
  // callback path; callback may be empty
  virtual BackendResult solve(const ModelIR& model, const BackendOptions& opts, const IncumbentCallback& callback,
                              const HeuristicCallback& heuristic = {}) = 0;
  // LP relaxation with the model's bounds and fixings; lazy rows included
  virtual LpResult solve_lp(const ModelIR& model, const std::map<int, double>& extra_fixings) = 0;
};

// name "" picks LOTFORGE_BACKEND or the default; throws BackendUnavailable
std::unique_ptr<MipBackend> make_backend(const std::string& name = "");
std::vector<std::string> available_backends();

}  // namespace lotforge
