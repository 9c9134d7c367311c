#include "fzmm/reformulate.hpp"

#include <cmath>

#include "fzmm/error.hpp"

namespace fzmm {

using milp::Entry;
using milp::RowSense;

std::string to_string(Component component) {
  switch (component) {
    case Component::kLo: return "lo";
    case Component::kMid: return "mid";
    case Component::kHi: return "hi";
  }
  return "?";
}

std::array<double, 3> TriObjectiveMilp::theta_value(std::span<const double> point) const {
  return {point[theta[0]], point[theta[1]], point[theta[2]]};
}

std::array<double, 3> TriObjectiveMilp::attained_theta(std::span<const double> point) const {
  std::array<double, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) {
    double top = -milp::kInf;
    for (std::size_t j = 0; j < minimax_row_count; ++j) {
      const std::size_t row = k * minimax_row_count + j;
      top = std::max(top, program.row_activity(row, point) + point[theta[k]] - program.rows()[row].rhs);
    }
    out[k] = top;
  }
  out[1] = std::max(out[1], out[0]);
  out[2] = std::max(out[2], out[1]);
  return out;
}

ComponentForms lower_product_components(const Tfn& c, const std::array<std::size_t, 3>& x) {
  const auto [lo, mid, hi] = x;
  if (c.lo() >= 0.0) return {LinearForm{{lo, c.lo()}}, LinearForm{{mid, c.mid()}}, LinearForm{{hi, c.hi()}}};
  if (c.hi() >= 0.0) return {LinearForm{{hi, c.lo()}}, LinearForm{{mid, c.mid()}}, LinearForm{{hi, c.hi()}}};
  return {LinearForm{{hi, c.lo()}}, LinearForm{{mid, c.mid()}}, LinearForm{{lo, c.hi()}}};
}

namespace {

const char* kComponentSuffix[3] = {"lo", "mid", "hi"};

class Reformulator {
 public:
  explicit Reformulator(const FuzzyMinimaxModel& model) : model_(model) {}

  TriObjectiveMilp run() {
    model_.validate();
    add_columns();
    add_minimax_rows();
    add_model_constraints();
    add_shape_rows();
    out_.minimax_row_count = model_.minimax_rows().size();
    out_.constraint_count = model_.constraints().size();
    return std::move(out_);
  }

 private:
  std::size_t add_column(double lower, double upper, bool binary, CrispOrigin origin,
                         std::string name) {
    const std::size_t id = out_.program.add_variable(lower, upper, 0.0, std::move(name));
    out_.variables.push_back({id, binary, lower, upper, origin});
    if (binary) out_.binaries.push_back(id);
    return id;
  }

  void add_columns() {
    using Kind = CrispOrigin::Kind;
    out_.source_columns.resize(model_.variables().size());
    for (const VariableRef& v : model_.variables()) {
      auto& cols = out_.source_columns[v.id];
      if (v.kind == VariableKind::kCrispBinary) {
        const std::size_t y = add_column(0.0, 1.0, true, {Kind::kBinaryY, v.id}, v.name);
        cols = {y, y, y};
        continue;
      }
      // x_lo >= 0 is the model's bound; x_mid, x_hi >= 0 follow from the
      // shape rows and are stated as bounds as well.
      const Kind kinds[3] = {Kind::kXLower, Kind::kXMid, Kind::kXUpper};
      for (std::size_t k = 0; k < 3; ++k) {
        cols[k] = add_column(0.0, milp::kInf, false, {kinds[k], v.id},
                             v.name + "_" + kComponentSuffix[k]);
      }
    }
    const Kind theta_kinds[3] = {Kind::kThetaLower, Kind::kThetaMid, Kind::kThetaUpper};
    for (std::size_t k = 0; k < 3; ++k) {
      out_.theta[k] = add_column(-milp::kInf, milp::kInf, false, {theta_kinds[k], 0},
                                 std::string("theta_") + kComponentSuffix[k]);
    }
  }

  ComponentForms lower_term(const Term& term) const {
    const auto& cols = out_.source_columns[term.variable];
    if (model_.variables()[term.variable].kind == VariableKind::kCrispBinary) {
      const Tfn& c = term.coefficient;
      return {LinearForm{{cols[0], c.lo()}}, LinearForm{{cols[0], c.mid()}},
              LinearForm{{cols[0], c.hi()}}};
    }
    return lower_product_components(term.coefficient, cols);
  }

  // Component forms of a whole expression, excluding its constant.
  ComponentForms lower_expression(const FuzzyLinearExpression& expr) const {
    ComponentForms forms;
    for (const Term& t : expr.terms()) {
      ComponentForms part = lower_term(t);
      for (std::size_t k = 0; k < 3; ++k) forms[k].insert(forms[k].end(), part[k].begin(), part[k].end());
    }
    return forms;
  }

  static double component(const Tfn& v, std::size_t k) {
    return k == 0 ? v.lo() : (k == 1 ? v.mid() : v.hi());
  }

  void add_minimax_rows() {
    const auto& rows = model_.minimax_rows();
    std::vector<ComponentForms> lowered;
    for (const auto& row : rows) lowered.push_back(lower_expression(row));
    for (std::size_t k = 0; k < 3; ++k) {
      for (std::size_t j = 0; j < rows.size(); ++j) {
        LinearForm entries = lowered[j][k];
        entries.push_back({out_.theta[k], -1.0});
        out_.program.add_row(std::move(entries), RowSense::kLessEqual,
                             -component(rows[j].constant(), k),
                             "mo" + std::to_string(k + 1) + "_" + std::to_string(j + 1));
      }
    }
  }

  void add_model_constraints() {
    const auto& constraints = model_.constraints();
    std::vector<ComponentForms> lhs;
    std::vector<ComponentForms> rhs;
    for (const auto& c : constraints) {
      lhs.push_back(lower_expression(c.lhs));
      rhs.push_back(lower_expression(c.rhs));
    }
    for (std::size_t k = 0; k < 3; ++k) {
      for (std::size_t j = 0; j < constraints.size(); ++j) {
        const FuzzyConstraint& c = constraints[j];
        LinearForm entries = lhs[j][k];
        for (const Entry& e : rhs[j][k]) entries.push_back({e.column, -e.value});
        const double bound = component(c.rhs.constant(), k) - component(c.lhs.constant(), k);
        const RowSense sense =
            c.relation == FuzzyRelation::kEqual ? RowSense::kEqual : RowSense::kLessEqual;
        out_.program.add_row(std::move(entries), sense, bound,
                             "mo" + std::to_string(k + 4) + "_" + std::to_string(j + 1));
      }
    }
  }

  void add_shape_rows() {
    auto& lp = out_.program;
    lp.add_row({{out_.theta[0], 1.0}, {out_.theta[1], -1.0}}, RowSense::kLessEqual, 0.0, "mo7");
    lp.add_row({{out_.theta[1], 1.0}, {out_.theta[2], -1.0}}, RowSense::kLessEqual, 0.0, "mo8");

    // Binary terms give (c.lo - c.mid) y <= 0 and (c.mid - c.hi) y <= 0,
    // which hold for every valid coefficient, so only fuzzy terms get rows.
    const auto& rows = model_.minimax_rows();
    for (std::size_t j = 0; j < rows.size(); ++j) {
      for (const Term& t : rows[j].terms()) {
        if (model_.variables()[t.variable].kind != VariableKind::kFuzzyNonnegative) continue;
        const ComponentForms f = lower_term(t);
        const std::string suffix = std::to_string(j + 1) + "_" + std::to_string(t.variable + 1);
        lp.add_row(difference(f[0], f[1]), RowSense::kLessEqual, 0.0, "mo9_" + suffix);
        lp.add_row(difference(f[1], f[2]), RowSense::kLessEqual, 0.0, "mo10_" + suffix);
      }
    }

    for (const VariableRef& v : model_.variables()) {
      if (v.kind != VariableKind::kFuzzyNonnegative) continue;
      const auto& cols = out_.source_columns[v.id];
      const std::string suffix = std::to_string(v.id + 1);
      lp.add_row({{cols[0], 1.0}, {cols[1], -1.0}}, RowSense::kLessEqual, 0.0, "mo11_" + suffix);
      lp.add_row({{cols[1], 1.0}, {cols[2], -1.0}}, RowSense::kLessEqual, 0.0, "mo12_" + suffix);
    }
  }

  static LinearForm difference(const LinearForm& a, const LinearForm& b) {
    LinearForm out = a;
    for (const Entry& e : b) out.push_back({e.column, -e.value});
    return out;
  }

  const FuzzyMinimaxModel& model_;
  TriObjectiveMilp out_;
};

}  // namespace

TriObjectiveMilp reformulate(const FuzzyMinimaxModel& model) { return Reformulator(model).run(); }

LiftedSolution lift_solution(const TriObjectiveMilp& milp, std::span<const double> point, double tol) {
  const double violation = max_violation(milp.program, point);
  if (violation > tol) {
    throw Error(ErrorCode::kInfeasiblePoint,
                "point violates the program by " + std::to_string(violation));
  }
  LiftedSolution lifted;
  lifted.assignment.reserve(milp.source_columns.size());
  for (const auto& cols : milp.source_columns) {
    if (cols[0] == cols[1]) {
      const double y = point[cols[0]];
      const double rounded = std::round(y);
      if (std::abs(y - rounded) > tol || (rounded != 0.0 && rounded != 1.0)) {
        throw Error(ErrorCode::kInfeasiblePoint, "binary value " + std::to_string(y));
      }
      lifted.assignment.push_back(Tfn::crisp(rounded));
      continue;
    }
    // Rows mo11-mo13 hold within tol; clip the residual so the triplet is valid.
    const double lo = std::max(0.0, point[cols[0]]);
    const double mid = std::max(lo, point[cols[1]]);
    const double hi = std::max(mid, point[cols[2]]);
    lifted.assignment.push_back(Tfn(lo, mid, hi));
  }
  const double t_lo = point[milp.theta[0]];
  const double t_mid = std::max(t_lo, point[milp.theta[1]]);
  lifted.theta = Tfn(t_lo, t_mid, std::max(t_mid, point[milp.theta[2]]));
  return lifted;
}

milp::LinearProgram scalarize(const TriObjectiveMilp& milp, const std::array<double, 3>& weights) {
  milp::LinearProgram lp = milp.program;
  lp.clear_costs();
  for (std::size_t k = 0; k < 3; ++k) lp.set_cost(milp.theta[k], weights[k]);
  return lp;
}

}  // namespace fzmm
