#include "lotforge/model.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "lotforge/error.hpp"

namespace lotforge {

const char* to_string(Tag t) {
  switch (t) {
    case Tag::SinglePurpose: return "single-purpose";
    case Tag::Accessibility: return "accessibility";
    case Tag::Flow: return "flow";
    case Tag::FlowForcing: return "flow-forcing";
    case Tag::DirectionLink: return "direction-link";
    case Tag::DirectionEndpoint: return "direction-endpoint";
    case Tag::AntiParallel: return "anti-parallel";
    case Tag::HopForward: return "hop-forward";
    case Tag::HopReverse: return "hop-reverse";
    case Tag::DeadEnd: return "dead-end";
    case Tag::Turn: return "turn";
    case Tag::FeasibilityCut: return "feasibility-cut";
  }
  return "?";
}

const char* to_string(VarKind k) {
  switch (k) {
    case VarKind::Park0: return "x0";
    case VarKind::Park90: return "x90";
    case VarKind::Drive: return "y";
    case VarKind::FlowF: return "f";
    case VarKind::FlowG: return "g";
    case VarKind::DirZ: return "z";
  }
  return "?";
}

double LinearConstraint::activity(const std::vector<double>& x) const {
  double s = 0;
  for (const Term& t : terms) s += t.coef * x[size_t(t.var)];
  return s;
}

double LinearConstraint::violation(const std::vector<double>& x) const {
  double a = activity(x);
  switch (sense) {
    case Sense::Le: return a - rhs;
    case Sense::Ge: return rhs - a;
    case Sense::Eq: return std::abs(a - rhs);
  }
  return 0;
}

int ModelIR::add_variable(const VarRef& ref, Domain domain, double ub) {
  auto [it, inserted] = index_.emplace(ref, int(vars_.size()));
  if (!inserted) throw LotError(ErrorCode::ModelMalformed, "duplicate variable " + var_name(it->second));
  vars_.push_back({ref, domain, 0.0, ub});
  return it->second;
}

int ModelIR::find(const VarRef& ref) const {
  auto it = index_.find(ref);
  return it == index_.end() ? -1 : it->second;
}

void ModelIR::add(LinearConstraint c) { cons_.push_back(std::move(c)); }

void ModelIR::fix(int var, double value) { fixings_[var] = value; }

double ModelIR::objective_coef(int var) const {
  auto k = vars_[size_t(var)].ref.kind;
  return (k == VarKind::Park0 || k == VarKind::Park90) ? 1.0 : 0.0;
}

double ModelIR::objective(const std::vector<double>& x) const {
  double s = 0;
  for (int i = 0; i < num_variables(); ++i) s += objective_coef(i) * x[size_t(i)];
  return s;
}

std::map<Tag, int> ModelIR::tag_counts() const {
  std::map<Tag, int> m;
  for (const auto& c : cons_) ++m[c.tag];
  return m;
}

void ModelIR::check() const {
  for (size_t i = 0; i < cons_.size(); ++i) {
    if (!std::isfinite(cons_[i].rhs))
      throw LotError(ErrorCode::ModelMalformed, "non-finite rhs in row " + std::to_string(i));
    for (const Term& t : cons_[i].terms)
      if (t.var < 0 || t.var >= num_variables() || !std::isfinite(t.coef))
        throw LotError(ErrorCode::ModelMalformed, "bad term in row " + std::to_string(i));
  }
  for (auto [v, val] : fixings_)
    if (v < 0 || v >= num_variables() || val < vars_[size_t(v)].lb - 1e-9 || val > vars_[size_t(v)].ub + 1e-9)
      throw LotError(ErrorCode::ModelMalformed, "bad fixing");
}

std::string ModelIR::var_name(int var) const {
  const VarRef& r = vars_[size_t(var)].ref;
  std::ostringstream os;
  os << to_string(r.kind) << "_" << r.a.row << "_" << r.a.col;
  if (r.kind == VarKind::FlowF || r.kind == VarKind::FlowG || r.kind == VarKind::DirZ)
    os << "_" << r.b.row << "_" << r.b.col;
  return os.str();
}

void ModelIR::write_lp(std::ostream& os) const {
  os << "Maximize\n obj:";
  bool any = false;
  for (int i = 0; i < num_variables(); ++i)
    if (objective_coef(i) != 0) {
      os << " + " << var_name(i);
      any = true;
    }
  if (!any) os << " 0 " << (vars_.empty() ? "dummy" : var_name(0));
  os << "\nSubject To\n";
  for (size_t i = 0; i < cons_.size(); ++i) {
    const auto& c = cons_[i];
    os << "\\ " << to_string(c.tag) << (c.lazy ? " (lazy)" : "") << "\n";
    os << " r" << i << ":";
    for (const Term& t : c.terms) os << (t.coef < 0 ? " - " : " + ") << std::abs(t.coef) << " " << var_name(t.var);
    if (c.terms.empty()) os << " 0 " << (vars_.empty() ? "dummy" : var_name(0));
    os << (c.sense == Sense::Le ? " <= " : c.sense == Sense::Ge ? " >= " : " = ") << c.rhs << "\n";
  }
  os << "Bounds\n";
  for (int i = 0; i < num_variables(); ++i) {
    auto it = fixings_.find(i);
    if (it != fixings_.end())
      os << " " << var_name(i) << " = " << it->second << "\n";
    else if (vars_[size_t(i)].domain == Domain::Continuous)
      os << " 0 <= " << var_name(i) << " <= " << vars_[size_t(i)].ub << "\n";
  }
  os << "Binary\n";
  for (int i = 0; i < num_variables(); ++i)
    if (vars_[size_t(i)].domain == Domain::Binary) os << " " << var_name(i) << "\n";
  os << "End\n";
}

Layout extract_layout(const ModelIR& model, const std::vector<double>& x, double tol) {
  if (int(x.size()) != model.num_variables())
    throw LotError(ErrorCode::ModelMalformed, "assignment size mismatch");
  Layout L;
  std::map<std::pair<Cell, Cell>, ArcFlow> flows;
  std::vector<std::pair<Cell, Cell>> dirs;
  for (int i = 0; i < model.num_variables(); ++i) {
    const Variable& v = model.variable(i);
    double val = x[size_t(i)];
    if (v.domain == Domain::Binary) {
      double r = std::round(val);
      if (std::abs(val - r) > tol || r < 0 || r > 1)
        throw LotError(ErrorCode::NonIntegralAssignment, model.var_name(i) + " = " + std::to_string(val));
      if (r < 0.5) continue;
      switch (v.ref.kind) {
        case VarKind::Park0: L.park0.push_back(v.ref.a); break;
        case VarKind::Park90: L.park90.push_back(v.ref.a); break;
        case VarKind::Drive: L.drive.push_back(v.ref.a); break;
        case VarKind::DirZ: dirs.push_back({v.ref.a, v.ref.b}); break;
        default: break;
      }
    } else if (std::abs(val) > tol) {
      auto& fl = flows[{v.ref.a, v.ref.b}];
      fl.from = v.ref.a;
      fl.to = v.ref.b;
      (v.ref.kind == VarKind::FlowF ? fl.f : fl.g) = val;
    }
  }
  for (auto* v : {&L.park0, &L.park90, &L.drive}) std::sort(v->begin(), v->end());
  std::sort(dirs.begin(), dirs.end());
  for (auto& [a, b] : dirs) {
    if (!std::binary_search(L.drive.begin(), L.drive.end(), a) ||
        !std::binary_search(L.drive.begin(), L.drive.end(), b))
      throw LotError(ErrorCode::Internal, "direction arc with inactive endpoint");
  }
  L.directions = std::move(dirs);
  for (auto& [k, fl] : flows) L.flows.push_back(fl);
  L.stall_count = int(L.park0.size() + L.park90.size());
  return L;
}

}  // namespace lotforge
