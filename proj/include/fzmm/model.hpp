#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fzmm/tfn.hpp"

namespace fzmm {

enum class VariableKind {
  kFuzzyNonnegative,  // x in T_{>=0}
  kCrispBinary,       // x = (v, v, v) with v in {0, 1}
};

std::string to_string(VariableKind kind);

struct VariableRef {
  std::size_t id = 0;
  VariableKind kind = VariableKind::kFuzzyNonnegative;
  std::string name;

  friend bool operator==(const VariableRef&, const VariableRef&) = default;
};

struct Term {
  Tfn coefficient;
  std::size_t variable = 0;
};

/// Sum of fuzzy coefficient * variable terms plus a fuzzy constant. Terms on
/// the same variable are merged by fuzzy addition of their coefficients.
class FuzzyLinearExpression {
 public:
  FuzzyLinearExpression() = default;
  explicit FuzzyLinearExpression(Tfn constant) : constant_(constant) {}

  FuzzyLinearExpression& add_term(const Tfn& coefficient, const VariableRef& variable);
  FuzzyLinearExpression& add_term(const Tfn& coefficient, std::size_t variable);
  FuzzyLinearExpression& add_constant(const Tfn& value);
  FuzzyLinearExpression& add(const FuzzyLinearExpression& other);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Tfn& constant() const noexcept { return constant_; }
  bool empty() const noexcept { return terms_.empty(); }

 private:
  std::vector<Term> terms_;
  Tfn constant_;
};

enum class FuzzyRelation {
  kLessOrApprox,
  kEqual,
};

std::string to_string(FuzzyRelation relation);

/// lhs (<~ or =) rhs. The right side is usually a constant b; it may also
/// carry variable terms (e.g. a capacity u * y), which are compared component
/// by component exactly like the constant.
struct FuzzyConstraint {
  FuzzyLinearExpression lhs;
  FuzzyRelation relation = FuzzyRelation::kLessOrApprox;
  FuzzyLinearExpression rhs;
  std::string name;
};

/// Fully fuzzy minimax mixed 0-1 program:
///   min Theta({row_1(x), ..., row_r(x)})  s.t. constraints.
class FuzzyMinimaxModel {
 public:
  VariableRef add_variable(std::string name, VariableKind kind);

  std::size_t add_constraint(FuzzyLinearExpression lhs, FuzzyRelation relation, const Tfn& rhs,
                             std::string name = {});
  std::size_t add_constraint(FuzzyLinearExpression lhs, FuzzyRelation relation,
                             FuzzyLinearExpression rhs, std::string name = {});

  /// Replaces the objective rows; `shared` is folded into every row.
  void set_minimax_rows(std::vector<FuzzyLinearExpression> rows,
                        const std::optional<FuzzyLinearExpression>& shared = std::nullopt);

  const std::vector<VariableRef>& variables() const noexcept { return variables_; }
  const std::vector<FuzzyConstraint>& constraints() const noexcept { return constraints_; }
  const std::vector<FuzzyLinearExpression>& minimax_rows() const noexcept { return rows_; }

  std::optional<VariableRef> find(std::string_view name) const;
  const VariableRef& variable(std::size_t id) const;

  std::size_t fuzzy_variable_count() const;
  std::size_t binary_variable_count() const;

  /// Throws kEmptyObjective or kUnknownVariable if the model is incomplete.
  void validate() const;

 private:
  void check_references(const FuzzyLinearExpression& expr) const;

  std::vector<VariableRef> variables_;
  std::vector<FuzzyConstraint> constraints_;
  std::vector<FuzzyLinearExpression> rows_;
};

/// Values indexed by variable id.
using FuzzyAssignment = std::vector<Tfn>;

struct Evaluation {
  Tfn objective;
  std::vector<Tfn> row_values;
  bool feasible = true;
  std::vector<std::string> violations;
};

/// Value of an expression under an assignment; binaries act as crisp scalars.
Tfn evaluate_expression(const FuzzyMinimaxModel& model, const FuzzyLinearExpression& expr,
                        std::span<const Tfn> assignment);

/// Objective Theta over the rows plus a feasibility report for every
/// constraint. Throws kIncompleteAssignment if the assignment size differs
/// from the variable count and kKindMismatch for a binary that is not a
/// degenerate 0/1 or a fuzzy variable with a negative lower end.
Evaluation evaluate(const FuzzyMinimaxModel& model, std::span<const Tfn> assignment,
                    double tol = 0.0);

/// Checks (x, theta) against the auxiliary form: every row <~ theta and every
/// constraint satisfied.
bool is_auxiliary_feasible(const FuzzyMinimaxModel& model, std::span<const Tfn> assignment,
                           const Tfn& theta, double tol = 0.0);

}  // namespace fzmm
