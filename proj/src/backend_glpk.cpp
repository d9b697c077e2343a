#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>

#include <glpk.h>

#include "lotforge/error.hpp"
#include "lotforge/model.hpp"

namespace lotforge {

namespace {

constexpr double kIntTol = 1e-6;

struct Problem {
  glp_prob* lp = glp_create_prob();
  ~Problem() { glp_delete_prob(lp); }
};

void set_row(glp_prob* lp, int row, const LinearConstraint& c, std::vector<int>& ind, std::vector<double>& val) {
  ind.assign(1, 0);
  val.assign(1, 0.0);
  for (const Term& t : c.terms) {
    ind.push_back(t.var + 1);
    val.push_back(t.coef);
  }
  int type = c.sense == Sense::Le ? GLP_UP : c.sense == Sense::Ge ? GLP_LO : GLP_FX;
  glp_set_row_bnds(lp, row, type, c.rhs, c.rhs);
  glp_set_mat_row(lp, row, int(c.terms.size()), ind.data(), val.data());
}

// merges duplicate columns so GLPK accepts the row
LinearConstraint merged(const LinearConstraint& c) {
  LinearConstraint out = c;
  std::sort(out.terms.begin(), out.terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> t;
  for (const Term& x : out.terms) {
    if (!t.empty() && t.back().var == x.var)
      t.back().coef += x.coef;
    else
      t.push_back(x);
  }
  t.erase(std::remove_if(t.begin(), t.end(), [](const Term& x) { return x.coef == 0; }), t.end());
  out.terms = std::move(t);
  return out;
}

bool trivially_satisfied(const LinearConstraint& c) {
  LinearConstraint e = c;
  return e.violation({}) <= 1e-9;
}

// returns false if some empty row is violated
bool load(glp_prob* lp, const ModelIR& model, bool include_lazy, bool integer,
          const std::map<int, double>& extra_fix, std::vector<LinearConstraint>* lazy_pool) {
  glp_set_obj_dir(lp, GLP_MAX);
  const int n = model.num_variables();
  if (n > 0) glp_add_cols(lp, n);
  for (int j = 0; j < n; ++j) {
    const Variable& v = model.variable(j);
    if (integer && v.domain == Domain::Binary) glp_set_col_kind(lp, j + 1, GLP_BV);
    glp_set_col_bnds(lp, j + 1, v.ub > v.lb ? GLP_DB : GLP_FX, v.lb, v.ub);
    glp_set_obj_coef(lp, j + 1, model.objective_coef(j));
  }
  auto fix = [&](int j, double val) { glp_set_col_bnds(lp, j + 1, GLP_FX, val, val); };
  for (auto [j, val] : model.fixings()) fix(j, val);
  for (auto [j, val] : extra_fix) fix(j, val);

  std::vector<int> ind;
  std::vector<double> val;
  for (const auto& raw : model.constraints()) {
    if (raw.lazy && !include_lazy) {
      if (lazy_pool) lazy_pool->push_back(merged(raw));
      continue;
    }
    LinearConstraint c = merged(raw);
    if (c.terms.empty()) {
      if (!trivially_satisfied(c)) return false;
      continue;
    }
    int r = glp_add_rows(lp, 1);
    set_row(lp, r, c, ind, val);
  }
  return true;
}

struct CallbackState {
  const ModelIR* model = nullptr;
  const IncumbentCallback* user = nullptr;
  const HeuristicCallback* heuristic = nullptr;
  int heur_events = 0;
  std::vector<LinearConstraint> pool;
  std::vector<LinearConstraint>* generated = nullptr;
  BackendStats* stats = nullptr;
  double bound = std::numeric_limits<double>::infinity();
  bool failed = false;
  std::string error;
};

void add_rows(glp_tree* tree, const std::vector<const LinearConstraint*>& rows) {
  glp_prob* lp = glp_ios_get_prob(tree);
  std::vector<int> ind;
  std::vector<double> val;
  int first = glp_add_rows(lp, int(rows.size()));
  for (size_t k = 0; k < rows.size(); ++k) set_row(lp, first + int(k), *rows[k], ind, val);
}

void run_heuristic(glp_tree* tree, CallbackState* st) {
  // every node early on, then thinning out
  int k = st->heur_events++;
  if (k >= 16 && k % 8 != 0) return;
  glp_prob* lp = glp_ios_get_prob(tree);
  const int n = st->model->num_variables();
  std::vector<double> x(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) x[size_t(j)] = glp_get_col_prim(lp, j + 1);
  SearchState state;
  state.bound = st->bound;
  if (glp_mip_status(lp) == GLP_FEAS || glp_mip_status(lp) == GLP_OPT) state.incumbent = glp_mip_obj_val(lp);
  ++st->stats->heuristic_calls;
  auto sol = (*st->heuristic)(x, state);
  if (!sol) return;
  std::vector<double> one(size_t(n) + 1, 0.0);
  for (int j = 0; j < n; ++j) {
    double v = (*sol)[size_t(j)];
    one[size_t(j) + 1] = st->model->variable(j).domain == Domain::Binary ? std::round(v) : v;
  }
  if (glp_ios_heur_sol(tree, one.data()) == 0) ++st->stats->heuristic_solutions;
}

void on_tree_event(glp_tree* tree, void* info) {
  auto* st = static_cast<CallbackState*>(info);
  if (st->failed) return;
  int best = glp_ios_best_node(tree);
  if (best != 0) st->bound = std::min(st->bound, glp_ios_node_bound(tree, best));
  if (glp_ios_reason(tree) == GLP_IHEUR) {
    if (st->heuristic && *st->heuristic) run_heuristic(tree, st);
    return;
  }
  if (glp_ios_reason(tree) != GLP_IROWGEN) return;

  glp_prob* lp = glp_ios_get_prob(tree);
  const int n = st->model->num_variables();
  std::vector<double> x(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    double v = glp_get_col_prim(lp, j + 1);
    if (st->model->variable(j).domain == Domain::Binary) {
      double r = std::round(v);
      if (std::abs(v - r) > kIntTol) return;  // fractional: leave it to branching
      v = r;
    }
    x[size_t(j)] = v;
  }
  ++st->stats->callback_calls;

  std::vector<const LinearConstraint*> add;
  for (const auto& c : st->pool)
    if (c.violated(x)) add.push_back(&c);
  if (!add.empty()) {
    ++st->stats->rejected_candidates;
    st->stats->lazy_rows_added += int(add.size());
    add_rows(tree, add);
    return;
  }
  if (!st->user || !*st->user) return;

  SearchState state;
  state.bound = st->bound;
  if (glp_mip_status(lp) == GLP_FEAS || glp_mip_status(lp) == GLP_OPT) state.incumbent = glp_mip_obj_val(lp);
  auto cuts = (*st->user)(x, state);
  if (cuts.empty()) return;
  std::vector<LinearConstraint> fresh;
  for (auto& c : cuts) {
    LinearConstraint m = merged(c);
    if (m.violated(x)) fresh.push_back(std::move(m));
  }
  if (fresh.empty()) {
    st->failed = true;
    st->error = "callback rejected a candidate without a violated row";
    glp_ios_terminate(tree);
    return;
  }
  ++st->stats->rejected_candidates;
  st->stats->lazy_rows_added += int(fresh.size());
  size_t base = st->pool.size();
  for (auto& c : fresh) {
    st->generated->push_back(c);
    st->pool.push_back(std::move(c));
  }
  add.clear();
  for (size_t k = base; k < st->pool.size(); ++k) add.push_back(&st->pool[k]);
  add_rows(tree, add);
}

class GlpkBackend : public MipBackend {
 public:
  std::string name() const override { return "glpk"; }
  bool supports_lazy() const override { return true; }

  BackendResult solve(const ModelIR& model, const BackendOptions& opts, const IncumbentCallback& callback,
                      const HeuristicCallback& heuristic) override {
    model.check();
    glp_term_out(opts.verbose ? GLP_ON : GLP_OFF);
    auto t0 = std::chrono::steady_clock::now();
    BackendResult res;
    Problem P;
    CallbackState st;
    st.model = &model;
    st.user = &callback;
    st.heuristic = &heuristic;
    st.generated = &res.generated;
    st.stats = &res.stats;

    if (!load(P.lp, model, !opts.native_lazy, true, {}, &st.pool)) {
      res.status = BackendStatus::Infeasible;
      return res;
    }
    if (model.num_variables() == 0 || glp_get_num_rows(P.lp) == 0) {
      // GLPK refuses empty problems; the objective is a plain bound check
      if (model.num_variables() == 0) {
        res.status = BackendStatus::Optimal;
        return res;
      }
      glp_add_rows(P.lp, 1);
      glp_set_row_bnds(P.lp, 1, GLP_FR, 0, 0);
    }

    glp_scale_prob(P.lp, GLP_SF_AUTO);
    glp_smcp smcp;
    glp_init_smcp(&smcp);
    smcp.msg_lev = opts.verbose ? GLP_MSG_ON : GLP_MSG_OFF;
    smcp.presolve = GLP_OFF;
    smcp.tm_lim = int(std::clamp(opts.time_limit_s * 1000.0, 1.0, 2e9));
    int rc = glp_simplex(P.lp, &smcp);
    if (rc == GLP_ETMLIM) {
      res.status = BackendStatus::NoSolution;
      res.bound = std::numeric_limits<double>::infinity();
      return res;
    }
    if (rc != 0) throw LotError(ErrorCode::Internal, "glp_simplex failed with code " + std::to_string(rc));
    int lp_stat = glp_get_status(P.lp);
    if (lp_stat == GLP_NOFEAS || lp_stat == GLP_INFEAS) {
      res.status = BackendStatus::Infeasible;
      return res;
    }
    st.bound = glp_get_obj_val(P.lp);

    double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    glp_iocp iocp;
    glp_init_iocp(&iocp);
    iocp.msg_lev = opts.verbose ? GLP_MSG_ON : GLP_MSG_OFF;
    iocp.presolve = GLP_OFF;
    iocp.tm_lim = int(std::clamp((opts.time_limit_s - used) * 1000.0, 1.0, 2e9));
    iocp.br_tech = GLP_BR_DTH;
    iocp.bt_tech = GLP_BT_BLB;
    iocp.mip_gap = 0.0;
    bool heur = opts.allow_heuristics || (st.pool.empty() && !callback);
    iocp.fp_heur = heur ? GLP_ON : GLP_OFF;
    iocp.ps_heur = GLP_OFF;
    iocp.sr_heur = heur ? GLP_ON : GLP_OFF;
    // gomory cuts drive the basis singular on the flow models
    iocp.gmi_cuts = GLP_OFF;
    iocp.mir_cuts = opts.backend_cuts ? GLP_ON : GLP_OFF;
    iocp.cov_cuts = opts.backend_cuts ? GLP_ON : GLP_OFF;
    iocp.clq_cuts = opts.backend_cuts ? GLP_ON : GLP_OFF;
    const bool rowgen = opts.native_lazy && (!st.pool.empty() || callback);
    if (rowgen || heuristic) {
      iocp.cb_func = on_tree_event;
      iocp.cb_info = &st;
      iocp.cb_reasons = (rowgen ? GLP_FROWGEN : 0) | (heuristic ? GLP_FHEUR : 0);
    } else {
      iocp.cb_func = nullptr;
    }
    rc = glp_intopt(P.lp, &iocp);
    if (st.failed) throw LotError(ErrorCode::Internal, st.error);

    int mip_stat = glp_mip_status(P.lp);
    bool have = mip_stat == GLP_OPT || mip_stat == GLP_FEAS;
    if (have) {
      res.objective = glp_mip_obj_val(P.lp);
      res.x.resize(size_t(model.num_variables()));
      for (int j = 0; j < model.num_variables(); ++j) {
        double v = glp_mip_col_val(P.lp, j + 1);
        if (model.variable(j).domain == Domain::Binary) v = std::round(v);
        res.x[size_t(j)] = v;
      }
    }
    if (rc == 0 && mip_stat == GLP_OPT) {
      res.status = BackendStatus::Optimal;
      res.bound = res.objective;
    } else if (rc == 0 && mip_stat == GLP_NOFEAS) {
      res.status = BackendStatus::Infeasible;
    } else if (rc == GLP_ETMLIM || rc == GLP_ESTOP || rc == GLP_EMIPGAP || rc == GLP_EFAIL) {
      // EFAIL: a node LP broke down numerically; the incumbent and bound so far still hold
      res.status = have ? BackendStatus::Feasible : BackendStatus::NoSolution;
      res.bound = st.bound;
      if (have) res.bound = std::max(res.bound, res.objective);
    } else if (rc == GLP_ENOPFS) {
      res.status = BackendStatus::Infeasible;
    } else {
      throw LotError(ErrorCode::Internal, "glp_intopt failed with code " + std::to_string(rc));
    }
    return res;
  }

  LpResult solve_lp(const ModelIR& model, const std::map<int, double>& extra_fixings) override {
    model.check();
    glp_term_out(GLP_OFF);
    LpResult out;
    Problem P;
    if (!load(P.lp, model, true, false, extra_fixings, nullptr)) return out;
    if (glp_get_num_rows(P.lp) == 0) {
      glp_add_rows(P.lp, 1);
      glp_set_row_bnds(P.lp, 1, GLP_FR, 0, 0);
    }
    glp_smcp smcp;
    glp_init_smcp(&smcp);
    smcp.msg_lev = GLP_MSG_OFF;
    smcp.presolve = GLP_OFF;
    if (glp_simplex(P.lp, &smcp) != 0 || glp_get_status(P.lp) != GLP_OPT) return out;
    out.optimal = true;
    out.objective = glp_get_obj_val(P.lp);
    out.x.resize(size_t(model.num_variables()));
    for (int j = 0; j < model.num_variables(); ++j) out.x[size_t(j)] = glp_get_col_prim(P.lp, j + 1);
    return out;
  }
};

}  // namespace

std::vector<std::string> available_backends() { return {"glpk"}; }

std::unique_ptr<MipBackend> make_backend(const std::string& requested) {
  std::string name = requested;
  if (name.empty()) {
    const char* env = std::getenv("LOTFORGE_BACKEND");
    name = (env && *env) ? env : "glpk";
  }
  if (name == "glpk") return std::make_unique<GlpkBackend>();
  throw LotError(ErrorCode::BackendUnavailable, "no backend named '" + name + "'");
}

}  // namespace lotforge
