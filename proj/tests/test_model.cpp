#include <doctest.h>

#include "fzmm/error.hpp"
#include "fzmm/model.hpp"

using namespace fzmm;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kSolverFailure;
}

// min Theta{(1,2,3) x1, (2,2,2) x2} s.t. x1 + x2 = (1,1,1).
FuzzyMinimaxModel small_model() {
  FuzzyMinimaxModel m;
  const auto x1 = m.add_variable("x1", VariableKind::kFuzzyNonnegative);
  const auto x2 = m.add_variable("x2", VariableKind::kFuzzyNonnegative);
  FuzzyLinearExpression r1;
  r1.add_term(Tfn(1, 2, 3), x1);
  FuzzyLinearExpression r2;
  r2.add_term(Tfn::crisp(2), x2);
  m.set_minimax_rows({r1, r2});
  FuzzyLinearExpression sum;
  sum.add_term(Tfn::crisp(1), x1).add_term(Tfn::crisp(1), x2);
  m.add_constraint(sum, FuzzyRelation::kEqual, Tfn::crisp(1), "total");
  return m;
}

}  // namespace

TEST_CASE("variables and names") {
  FuzzyMinimaxModel m;
  const auto x = m.add_variable("x", VariableKind::kFuzzyNonnegative);
  const auto y = m.add_variable("y", VariableKind::kCrispBinary);
  CHECK(x.id == 0);
  CHECK(y.id == 1);
  CHECK(m.find("y") == y);
  CHECK_FALSE(m.find("z"));
  CHECK(m.fuzzy_variable_count() == 1);
  CHECK(m.binary_variable_count() == 1);
  CHECK(code_of([&] { m.add_variable("x", VariableKind::kCrispBinary); }) == ErrorCode::kDuplicateName);
}

TEST_CASE("expressions merge terms on the same variable") {
  FuzzyLinearExpression e;
  e.add_term(Tfn(1, 2, 3), 0).add_term(Tfn(1, 1, 1), 0).add_term(Tfn(0, 1, 2), 1);
  REQUIRE(e.terms().size() == 2);
  CHECK(e.terms()[0].coefficient == Tfn(2, 3, 4));
  e.add_constant(Tfn(1, 1, 2));
  CHECK(e.constant() == Tfn(1, 1, 2));
}

TEST_CASE("model validation") {
  FuzzyMinimaxModel m;
  m.add_variable("x", VariableKind::kFuzzyNonnegative);
  CHECK(code_of([&] { m.validate(); }) == ErrorCode::kEmptyObjective);
  FuzzyLinearExpression bad;
  bad.add_term(Tfn::crisp(1), 7);
  CHECK(code_of([&] { m.add_constraint(bad, FuzzyRelation::kEqual, Tfn()); }) == ErrorCode::kUnknownVariable);
  CHECK(code_of([&] { m.set_minimax_rows({}); }) == ErrorCode::kEmptyObjective);
}

TEST_CASE("shared objective terms are folded into every row") {
  FuzzyMinimaxModel m;
  const auto x = m.add_variable("x", VariableKind::kFuzzyNonnegative);
  const auto y = m.add_variable("y", VariableKind::kCrispBinary);
  FuzzyLinearExpression r;
  r.add_term(Tfn(1, 2, 3), x);
  FuzzyLinearExpression shared;
  shared.add_term(Tfn(4, 5, 6), y);
  m.set_minimax_rows({r, r}, shared);
  for (const auto& row : m.minimax_rows()) CHECK(row.terms().size() == 2);
}

TEST_CASE("evaluation") {
  const FuzzyMinimaxModel m = small_model();
  const FuzzyAssignment a{Tfn(0.5, 0.5, 0.5), Tfn(0.5, 0.5, 0.5)};
  const Evaluation e = evaluate(m, a);
  CHECK(e.feasible);
  CHECK(e.row_values[0] == Tfn(0.5, 1, 1.5));
  CHECK(e.objective == Tfn(1, 1, 1.5));
  CHECK(is_auxiliary_feasible(m, a, Tfn(1, 1, 1.5)));
  CHECK_FALSE(is_auxiliary_feasible(m, a, Tfn(1, 1, 1.4)));

  const FuzzyAssignment off{Tfn(0.5, 0.5, 0.6), Tfn(0.5, 0.5, 0.5)};
  const Evaluation bad = evaluate(m, off);
  CHECK_FALSE(bad.feasible);
  CHECK(bad.violations.size() == 1);

  CHECK(code_of([&] { evaluate(m, FuzzyAssignment{Tfn()}); }) == ErrorCode::kIncompleteAssignment);
  CHECK(code_of([&] { evaluate(m, FuzzyAssignment{Tfn(-1, 0, 0), Tfn()}); }) == ErrorCode::kKindMismatch);
}

TEST_CASE("binaries must be crisp 0 or 1") {
  FuzzyMinimaxModel m;
  const auto y = m.add_variable("y", VariableKind::kCrispBinary);
  FuzzyLinearExpression r;
  r.add_term(Tfn(1, 2, 3), y);
  m.set_minimax_rows({r});
  CHECK(evaluate(m, FuzzyAssignment{Tfn::crisp(1)}).objective == Tfn(1, 2, 3));
  CHECK(code_of([&] { evaluate(m, FuzzyAssignment{Tfn::crisp(0.5)}); }) == ErrorCode::kKindMismatch);
  CHECK(code_of([&] { evaluate(m, FuzzyAssignment{Tfn(0, 1, 1)}); }) == ErrorCode::kKindMismatch);
}

TEST_CASE("right-hand sides with variables") {
  FuzzyMinimaxModel m;
  const auto x = m.add_variable("x", VariableKind::kFuzzyNonnegative);
  const auto y = m.add_variable("y", VariableKind::kCrispBinary);
  FuzzyLinearExpression r;
  r.add_term(Tfn::crisp(1), x);
  m.set_minimax_rows({r});
  FuzzyLinearExpression cap;
  cap.add_term(Tfn(2, 3, 4), y);
  FuzzyLinearExpression load;
  load.add_term(Tfn::crisp(1), x);
  m.add_constraint(load, FuzzyRelation::kLessOrApprox, cap, "cap");
  CHECK(evaluate(m, FuzzyAssignment{Tfn(2, 3, 4), Tfn::crisp(1)}).feasible);
  CHECK_FALSE(evaluate(m, FuzzyAssignment{Tfn(2, 3, 4), Tfn::crisp(0)}).feasible);
  CHECK_FALSE(evaluate(m, FuzzyAssignment{Tfn(2, 3.5, 3.5), Tfn::crisp(1)}).feasible);
}
