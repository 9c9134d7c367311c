#include <doctest.h>

#include <random>

#include "audit.hpp"
#include "fzmm/error.hpp"
#include "fzmm/reformulate.hpp"

using namespace fzmm;
using milp::Entry;

namespace {

bool same_form(const LinearForm& a, const std::vector<std::pair<std::size_t, double>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].column != b[k].first || a[k].value != b[k].second) return false;
  }
  return true;
}

const milp::Row* find_row(const TriObjectiveMilp& m, const std::string& name) {
  for (const auto& r : m.program.rows()) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

double coefficient(const milp::Row& row, std::size_t column) {
  for (const Entry& e : row.entries) {
    if (e.column == column) return e.value;
  }
  return 0.0;
}

}  // namespace

TEST_CASE("product lowering by coefficient sign") {
  const std::array<std::size_t, 3> x{10, 11, 12};
  auto f = lower_product_components(Tfn(2, 3, 4), x);
  CHECK(same_form(f[0], {{10, 2}}));
  CHECK(same_form(f[1], {{11, 3}}));
  CHECK(same_form(f[2], {{12, 4}}));
  f = lower_product_components(Tfn(-1, 1, 2), x);
  CHECK(same_form(f[0], {{12, -1}}));
  CHECK(same_form(f[1], {{11, 1}}));
  CHECK(same_form(f[2], {{12, 2}}));
  f = lower_product_components(Tfn(-4, -3, -2), x);
  CHECK(same_form(f[0], {{12, -4}}));
  CHECK(same_form(f[1], {{11, -3}}));
  CHECK(same_form(f[2], {{10, -2}}));
}

TEST_CASE("single variable, single row") {
  FuzzyMinimaxModel model;
  const auto x = model.add_variable("x", VariableKind::kFuzzyNonnegative);
  FuzzyLinearExpression row;
  row.add_term(Tfn::crisp(1), x);
  model.set_minimax_rows({row});
  const TriObjectiveMilp m = reformulate(model);

  CHECK(m.program.num_variables() == 6);
  CHECK(m.program.num_rows() == 3 + 2 + 2 + 2);
  const auto& cols = m.source_columns[0];
  for (std::size_t k = 0; k < 3; ++k) {
    const milp::Row* r = find_row(m, "mo" + std::to_string(k + 1) + "_1");
    REQUIRE(r);
    CHECK(coefficient(*r, cols[k]) == 1);
    CHECK(coefficient(*r, m.theta[k]) == -1);
    CHECK(m.program.lower()[cols[k]] == 0);
    CHECK(m.program.lower()[m.theta[k]] == -milp::kInf);
  }
  CHECK(find_row(m, "mo7"));
  CHECK(find_row(m, "mo8"));
  CHECK(find_row(m, "mo11_1"));
  CHECK(find_row(m, "mo12_1"));
  CHECK(m.program.names()[cols[0]] == "x_lo");
  CHECK(m.program.names()[m.theta[2]] == "theta_hi");
}

TEST_CASE("shape rows on a mixed-sign coefficient") {
  FuzzyMinimaxModel model;
  const auto x = model.add_variable("x", VariableKind::kFuzzyNonnegative);
  FuzzyLinearExpression row;
  row.add_term(Tfn(-1, 1, 2), x);
  model.set_minimax_rows({row});
  const TriObjectiveMilp m = reformulate(model);
  const auto& cols = m.source_columns[0];
  const milp::Row* mo9 = find_row(m, "mo9_1_1");
  const milp::Row* mo10 = find_row(m, "mo10_1_1");
  REQUIRE(mo9);
  REQUIRE(mo10);
  CHECK(coefficient(*mo9, cols[2]) == -1);
  CHECK(coefficient(*mo9, cols[1]) == -1);
  CHECK(mo9->rhs == 0);
  CHECK(coefficient(*mo10, cols[1]) == 1);
  CHECK(coefficient(*mo10, cols[2]) == -2);
}

TEST_CASE("row count and binary handling") {
  // r = 2 rows, m = 2 constraints, 2 fuzzy + 1 binary variable.
  FuzzyMinimaxModel model;
  const auto x1 = model.add_variable("x1", VariableKind::kFuzzyNonnegative);
  const auto x2 = model.add_variable("x2", VariableKind::kFuzzyNonnegative);
  const auto y = model.add_variable("y", VariableKind::kCrispBinary);
  FuzzyLinearExpression r1;
  r1.add_term(Tfn(1, 2, 3), x1).add_term(Tfn(1, 1, 2), x2).add_term(Tfn(5, 6, 7), y);
  FuzzyLinearExpression r2;
  r2.add_term(Tfn(0, 1, 1), x2);
  model.set_minimax_rows({r1, r2});
  FuzzyLinearExpression c1;
  c1.add_term(Tfn::crisp(1), x1).add_term(Tfn::crisp(1), x2);
  model.add_constraint(c1, FuzzyRelation::kEqual, Tfn(1, 2, 3), "demand");
  FuzzyLinearExpression c2;
  c2.add_term(Tfn::crisp(1), x1);
  FuzzyLinearExpression cap;
  cap.add_term(Tfn(1, 2, 4), y);
  model.add_constraint(c2, FuzzyRelation::kLessOrApprox, cap, "cap");

  const TriObjectiveMilp m = reformulate(model);
  const std::size_t fuzzy_terms = 2 + 1;
  CHECK(m.program.num_rows() == 3 * 2 + 3 * 2 + 2 + 2 * fuzzy_terms + 2 * 2);
  CHECK(m.program.num_variables() == 3 * 2 + 1 + 3);
  REQUIRE(m.binaries.size() == 1);
  const std::size_t yc = m.binaries[0];
  CHECK(m.source_columns[2] == std::array<std::size_t, 3>{yc, yc, yc});

  const milp::Row* mo1 = find_row(m, "mo1_1");
  const milp::Row* mo3 = find_row(m, "mo3_1");
  REQUIRE(mo1);
  REQUIRE(mo3);
  CHECK(coefficient(*mo1, yc) == 5);
  CHECK(coefficient(*mo3, yc) == 7);

  // Lower component against b-, mid against b-hat, upper against b+.
  const milp::Row* lo = find_row(m, "mo4_1");
  const milp::Row* mid = find_row(m, "mo5_1");
  const milp::Row* hi = find_row(m, "mo6_1");
  REQUIRE(lo);
  REQUIRE(mid);
  REQUIRE(hi);
  CHECK(lo->rhs == 1);
  CHECK(mid->rhs == 2);
  CHECK(hi->rhs == 3);
  CHECK(lo->sense == milp::RowSense::kEqual);
  const milp::Row* cap_hi = find_row(m, "mo6_2");
  REQUIRE(cap_hi);
  CHECK(coefficient(*cap_hi, yc) == -4);
  CHECK(cap_hi->sense == milp::RowSense::kLessEqual);
}

TEST_CASE("lifting") {
  FuzzyMinimaxModel model;
  const auto x = model.add_variable("x", VariableKind::kFuzzyNonnegative);
  FuzzyLinearExpression row;
  row.add_term(Tfn::crisp(1), x);
  model.set_minimax_rows({row});
  const TriObjectiveMilp m = reformulate(model);
  std::vector<double> point(m.program.num_variables());
  const auto& cols = m.source_columns[0];
  point[cols[0]] = 1;
  point[cols[1]] = 2;
  point[cols[2]] = 3;
  point[m.theta[0]] = 4;
  point[m.theta[1]] = 5;
  point[m.theta[2]] = 6;
  const LiftedSolution lifted = lift_solution(m, point);
  CHECK(lifted.assignment[0] == Tfn(1, 2, 3));
  CHECK(lifted.theta == Tfn(4, 5, 6));
  CHECK(m.attained_theta(point) == std::array<double, 3>{1, 2, 3});

  point[cols[0]] = 2.001;
  CHECK_THROWS_AS(lift_solution(m, point, 1e-6), Error);
}

TEST_CASE("crisp data collapses to the crisp minimax optimum") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 40; ++n) {
    const FuzzyMinimaxModel model = audit::random_crisp_minimax(rng(), 1 + rng() % 3, 1 + rng() % 4);
    const auto oracle = audit::crisp_minimax_by_enumeration(model);
    const TriObjectiveMilp m = reformulate(model);
    const auto sol = milp::solve_milp(scalarize(m, {0, 1, 0}), m.binaries);
    REQUIRE(oracle);
    REQUIRE(sol.status == milp::SolveStatus::kOptimal);
    CHECK(sol.objective == doctest::Approx(*oracle).epsilon(1e-9));

    // Round trip: the lifted point is feasible and its objective sits below theta.
    const LiftedSolution lifted = lift_solution(m, sol.point);
    const Evaluation e = evaluate(model, lifted.assignment, 1e-6);
    CHECK(e.feasible);
    CHECK(less_or_approx(e.objective, lifted.theta, 1e-6));
  }
}
