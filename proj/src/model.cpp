#include "fzmm/model.hpp"

#include <algorithm>

#include "fzmm/error.hpp"

namespace fzmm {

std::string to_string(VariableKind kind) {
  return kind == VariableKind::kFuzzyNonnegative ? "fuzzy" : "binary";
}

std::string to_string(FuzzyRelation relation) {
  return relation == FuzzyRelation::kLessOrApprox ? "<~" : "=";
}

FuzzyLinearExpression& FuzzyLinearExpression::add_term(const Tfn& coefficient,
                                                       const VariableRef& variable) {
  return add_term(coefficient, variable.id);
}

FuzzyLinearExpression& FuzzyLinearExpression::add_term(const Tfn& coefficient,
                                                       std::size_t variable) {
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const Term& t) { return t.variable == variable; });
  if (it != terms_.end()) {
    it->coefficient = fzmm::add(it->coefficient, coefficient);
  } else {
    terms_.push_back({coefficient, variable});
  }
  return *this;
}

FuzzyLinearExpression& FuzzyLinearExpression::add_constant(const Tfn& value) {
  constant_ = fzmm::add(constant_, value);
  return *this;
}

FuzzyLinearExpression& FuzzyLinearExpression::add(const FuzzyLinearExpression& other) {
  for (const Term& t : other.terms_) add_term(t.coefficient, t.variable);
  return add_constant(other.constant_);
}

VariableRef FuzzyMinimaxModel::add_variable(std::string name, VariableKind kind) {
  if (find(name)) throw Error(ErrorCode::kDuplicateName, "variable '" + name + "' already exists");
  VariableRef ref{variables_.size(), kind, std::move(name)};
  variables_.push_back(ref);
  return ref;
}

std::size_t FuzzyMinimaxModel::add_constraint(FuzzyLinearExpression lhs, FuzzyRelation relation,
                                              const Tfn& rhs, std::string name) {
  return add_constraint(std::move(lhs), relation, FuzzyLinearExpression(rhs), std::move(name));
}

std::size_t FuzzyMinimaxModel::add_constraint(FuzzyLinearExpression lhs, FuzzyRelation relation,
                                              FuzzyLinearExpression rhs, std::string name) {
  check_references(lhs);
  check_references(rhs);
  constraints_.push_back({std::move(lhs), relation, std::move(rhs), std::move(name)});
  return constraints_.size() - 1;
}

void FuzzyMinimaxModel::set_minimax_rows(std::vector<FuzzyLinearExpression> rows,
                                         const std::optional<FuzzyLinearExpression>& shared) {
  if (rows.empty()) throw Error(ErrorCode::kEmptyObjective, "at least one minimax row is required");
  for (const auto& row : rows) check_references(row);
  if (shared) {
    check_references(*shared);
    for (auto& row : rows) row.add(*shared);
  }
  rows_ = std::move(rows);
}

std::optional<VariableRef> FuzzyMinimaxModel::find(std::string_view name) const {
  for (const auto& v : variables_) {
    if (v.name == name) return v;
  }
  return std::nullopt;
}

const VariableRef& FuzzyMinimaxModel::variable(std::size_t id) const {
  if (id >= variables_.size()) {
    throw Error(ErrorCode::kUnknownVariable, "variable id " + std::to_string(id));
  }
  return variables_[id];
}

std::size_t FuzzyMinimaxModel::fuzzy_variable_count() const {
  return static_cast<std::size_t>(std::count_if(variables_.begin(), variables_.end(), [](const auto& v) {
    return v.kind == VariableKind::kFuzzyNonnegative;
  }));
}

std::size_t FuzzyMinimaxModel::binary_variable_count() const {
  return variables_.size() - fuzzy_variable_count();
}

void FuzzyMinimaxModel::validate() const {
  if (rows_.empty()) throw Error(ErrorCode::kEmptyObjective, "model has no minimax rows");
  for (const auto& row : rows_) check_references(row);
  for (const auto& c : constraints_) {
    check_references(c.lhs);
    check_references(c.rhs);
  }
}

void FuzzyMinimaxModel::check_references(const FuzzyLinearExpression& expr) const {
  for (const Term& t : expr.terms()) {
    if (t.variable >= variables_.size()) {
      throw Error(ErrorCode::kUnknownVariable,
                  "expression references variable id " + std::to_string(t.variable) +
                      " but the model has " + std::to_string(variables_.size()));
    }
  }
}

namespace {

void check_assignment(const FuzzyMinimaxModel& model, std::span<const Tfn> assignment) {
  if (assignment.size() != model.variables().size()) {
    throw Error(ErrorCode::kIncompleteAssignment,
                "expected " + std::to_string(model.variables().size()) + " values, got " +
                    std::to_string(assignment.size()));
  }
  for (const auto& v : model.variables()) {
    const Tfn& value = assignment[v.id];
    if (v.kind == VariableKind::kCrispBinary) {
      if (!value.is_degenerate() || (value.mid() != 0.0 && value.mid() != 1.0)) {
        throw Error(ErrorCode::kKindMismatch,
                    "binary '" + v.name + "' assigned " + to_string(value));
      }
    } else if (!value.is_nonnegative()) {
      throw Error(ErrorCode::kKindMismatch,
                  "fuzzy nonnegative '" + v.name + "' assigned " + to_string(value));
    }
  }
}

Tfn term_value(const FuzzyMinimaxModel& model, const Term& term, std::span<const Tfn> assignment) {
  const Tfn& value = assignment[term.variable];
  if (model.variable(term.variable).kind == VariableKind::kCrispBinary) {
    return scale(value.mid(), term.coefficient);
  }
  return mul(term.coefficient, value);
}

}  // namespace

Tfn evaluate_expression(const FuzzyMinimaxModel& model, const FuzzyLinearExpression& expr,
                        std::span<const Tfn> assignment) {
  Tfn sum = expr.constant();
  for (const Term& t : expr.terms()) sum = add(sum, term_value(model, t, assignment));
  return sum;
}

Evaluation evaluate(const FuzzyMinimaxModel& model, std::span<const Tfn> assignment, double tol) {
  model.validate();
  check_assignment(model, assignment);

  Evaluation result;
  for (const auto& row : model.minimax_rows()) {
    result.row_values.push_back(evaluate_expression(model, row, assignment));
  }
  result.objective = theta_mub(result.row_values);

  for (std::size_t k = 0; k < model.constraints().size(); ++k) {
    const FuzzyConstraint& c = model.constraints()[k];
    const Tfn lhs = evaluate_expression(model, c.lhs, assignment);
    const Tfn rhs = evaluate_expression(model, c.rhs, assignment);
    const bool ok = c.relation == FuzzyRelation::kEqual ? approx_equal(lhs, rhs, tol)
                                                        : less_or_approx(lhs, rhs, tol);
    if (!ok) {
      result.feasible = false;
      const std::string label = c.name.empty() ? "constraint " + std::to_string(k) : c.name;
      result.violations.push_back(label + ": " + to_string(lhs) + ' ' + to_string(c.relation) +
                                  ' ' + to_string(rhs));
    }
  }
  return result;
}

bool is_auxiliary_feasible(const FuzzyMinimaxModel& model, std::span<const Tfn> assignment,
                           const Tfn& theta, double tol) {
  const Evaluation e = evaluate(model, assignment, tol);
  if (!e.feasible) return false;
  return std::all_of(e.row_values.begin(), e.row_values.end(),
                     [&](const Tfn& row) { return less_or_approx(row, theta, tol); });
}

}  // namespace fzmm
