#include "fzmm/pareto.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <optional>
#include <ostream>
#include <thread>

#include "fzmm/error.hpp"

namespace fzmm {
namespace {

using milp::LinearProgram;
using milp::RowSense;
using milp::SolveStatus;

milp::MilpSolution solve(const TriObjectiveMilp& milp, const LinearProgram& lp,
                         const ParetoOptions& options) {
  milp::MilpSolution sol = options.backend->solve(lp, milp.binaries);
  if (sol.status == SolveStatus::kInfeasible) {
    throw Error(ErrorCode::kInfeasible, "scalarized program is infeasible");
  }
  if (sol.status == SolveStatus::kUnbounded) {
    throw Error(ErrorCode::kUnbounded, "scalarized program is unbounded");
  }
  return sol;
}

void set_single_cost(LinearProgram& lp, std::size_t column) {
  lp.clear_costs();
  lp.set_cost(column, 1.0);
}

ParetoPoint make_point(const TriObjectiveMilp& milp, std::vector<double> decision,
                       std::string method) {
  ParetoPoint p;
  p.theta = milp.attained_theta(decision);
  for (std::size_t k = 0; k < 3; ++k) decision[milp.theta[k]] = p.theta[k];
  p.decision = std::move(decision);
  p.method = std::move(method);
  return p;
}

std::string order_tag(const std::array<Component, 3>& order) {
  std::string tag = "lex";
  for (Component c : order) tag += "-" + to_string(c);
  return tag;
}

// Runs the lexicographic stages on a copy of `lp`.
std::vector<double> lexicographic_point(const TriObjectiveMilp& milp, LinearProgram lp,
                                        const std::array<Component, 3>& order,
                                        const ParetoOptions& options) {
  std::vector<double> point;
  for (std::size_t stage = 0; stage < order.size(); ++stage) {
    const std::size_t column = milp.theta_column(order[stage]);
    set_single_cost(lp, column);
    milp::MilpSolution sol = solve(milp, lp, options);
    if (stage + 1 < order.size()) {
      lp.add_row({{column, 1.0}}, RowSense::kLessEqual, sol.objective + options.lex_delta,
                 "lex_stage_" + std::to_string(stage + 1));
    }
    point = std::move(sol.point);
  }
  return point;
}

// Two-stage subproblem for one grid cell; nullopt when the cell is infeasible.
std::optional<ParetoPoint> epsilon_cell(const TriObjectiveMilp& milp, double eps_mid,
                                        double eps_hi, const std::string& tag,
                                        const ParetoOptions& options) {
  LinearProgram lp = milp.program;
  lp.add_row({{milp.theta[1], 1.0}}, RowSense::kLessEqual, eps_mid + options.tol, "eps_mid");
  lp.add_row({{milp.theta[2], 1.0}}, RowSense::kLessEqual, eps_hi + options.tol, "eps_hi");
  set_single_cost(lp, milp.theta[0]);
  milp::MilpSolution first = options.backend->solve(lp, milp.binaries);
  if (first.status == SolveStatus::kInfeasible) return std::nullopt;
  if (first.status == SolveStatus::kUnbounded) {
    throw Error(ErrorCode::kUnbounded, "epsilon subproblem is unbounded");
  }
  lp.add_row({{milp.theta[0], 1.0}}, RowSense::kLessEqual, first.objective + options.lex_delta,
             "eps_hold_lo");
  lp.clear_costs();
  lp.set_cost(milp.theta[1], 1.0);
  lp.set_cost(milp.theta[2], 1.0);
  milp::MilpSolution second = solve(milp, lp, options);
  return make_point(milp, std::move(second.point), tag);
}

std::vector<double> grid_values(double ideal, double worst, std::size_t n) {
  if (n <= 1) return {worst};
  std::vector<double> values(n);
  for (std::size_t a = 0; a < n; ++a) {
    values[a] = ideal + (worst - ideal) * static_cast<double>(a) / static_cast<double>(n - 1);
  }
  values.back() = worst;
  return values;
}

// Solver output carries relative error, so the tolerance grows with magnitude.
double scaled(double tol, double a, double b) {
  return tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool approx_same(const std::array<double, 3>& a, const std::array<double, 3>& b, double tol) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (std::abs(a[k] - b[k]) > scaled(tol, a[k], b[k])) return false;
  }
  return true;
}

}  // namespace

ParetoPoint weighted_sum(const TriObjectiveMilp& milp, const std::array<double, 3>& weights,
                         const ParetoOptions& options) {
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kNonpositiveWeight, "weights must be positive and finite");
    }
  }
  milp::MilpSolution sol = solve(milp, scalarize(milp, weights), options);
  return make_point(milp, std::move(sol.point), "weighted");
}

ParetoPoint lexicographic(const TriObjectiveMilp& milp, const std::array<Component, 3>& order,
                          const ParetoOptions& options) {
  std::array<bool, 3> seen{};
  for (Component c : order) {
    const auto k = static_cast<std::size_t>(c);
    if (k > 2 || seen[k]) throw Error(ErrorCode::kInvalidOrder, "order must be a permutation of lo, mid, hi");
    seen[k] = true;
  }
  return make_point(milp, lexicographic_point(milp, milp.program, order, options),
                    order_tag(order));
}

ParetoSet epsilon_constraint_enumerate(const TriObjectiveMilp& milp, const GridSize& grid,
                                       const ParetoOptions& options) {
  using C = Component;
  const std::array<std::array<Component, 3>, 3> orders = {{
      {C::kLo, C::kMid, C::kHi},
      {C::kMid, C::kLo, C::kHi},
      {C::kHi, C::kLo, C::kMid},
  }};
  std::vector<ParetoPoint> candidates;
  std::array<double, 3> ideal{};
  std::array<double, 3> worst{-milp::kInf, -milp::kInf, -milp::kInf};
  for (std::size_t k = 0; k < orders.size(); ++k) {
    ParetoPoint p = lexicographic(milp, orders[k], options);
    ideal[k] = p.theta[k];
    for (std::size_t c = 0; c < 3; ++c) worst[c] = std::max(worst[c], p.theta[c]);
    candidates.push_back(std::move(p));
  }

  const std::vector<double> mid_values = grid_values(ideal[1], worst[1], grid.mid);
  const std::vector<double> hi_values = grid_values(ideal[2], worst[2], grid.hi);
  const std::size_t cells = mid_values.size() * hi_values.size();
  std::vector<std::optional<ParetoPoint>> results(cells);
  std::vector<std::exception_ptr> errors(cells);

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t cell = next++; cell < cells; cell = next++) {
      const std::size_t a = cell / hi_values.size();
      const std::size_t b = cell % hi_values.size();
      try {
        results[cell] = epsilon_cell(milp, mid_values[a], hi_values[b],
                                     "eps-" + std::to_string(a) + "-" + std::to_string(b),
                                     options);
      } catch (...) {
        errors[cell] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(cells)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  // Merge in grid order so the archive does not depend on the worker count.
  for (std::size_t cell = 0; cell < cells; ++cell) {
    if (errors[cell]) std::rethrow_exception(errors[cell]);
    if (results[cell]) candidates.push_back(std::move(*results[cell]));
  }
  return filter_nondominated(candidates, options.tol);
}

bool dominates(const std::array<double, 3>& a, const std::array<double, 3>& b, double tol) {
  bool strict = false;
  for (std::size_t k = 0; k < 3; ++k) {
    const double t = scaled(tol, a[k], b[k]);
    if (a[k] > b[k] + t) return false;
    if (a[k] < b[k] - t) strict = true;
  }
  return strict;
}

ParetoSet filter_nondominated(const std::vector<ParetoPoint>& points, double tol) {
  ParetoSet set;
  for (std::size_t q = 0; q < points.size(); ++q) {
    const bool dominated = std::any_of(points.begin(), points.end(), [&](const ParetoPoint& p) {
      return dominates(p.theta, points[q].theta, tol);
    });
    if (dominated) continue;
    const bool duplicate = std::any_of(set.points.begin(), set.points.end(), [&](const ParetoPoint& p) {
      return approx_same(p.theta, points[q].theta, tol);
    });
    (duplicate ? set.alternates : set.points).push_back(points[q]);
  }
  return set;
}

void write_csv(std::ostream& out, const ParetoSet& set, const milp::LinearProgram& program) {
  const auto old_precision = out.precision(17);
  out << "method,theta_lo,theta_mid,theta_hi";
  for (const auto& name : program.names()) out << ',' << name;
  out << '\n';
  for (const ParetoPoint& p : set.points) {
    out << p.method << ',' << p.theta[0] << ',' << p.theta[1] << ',' << p.theta[2];
    for (double v : p.decision) out << ',' << v;
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace fzmm
