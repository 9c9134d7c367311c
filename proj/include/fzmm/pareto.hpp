#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "fzmm/milp.hpp"
#include "fzmm/reformulate.hpp"

namespace fzmm {

struct ParetoPoint {
  std::array<double, 3> theta{};
  std::vector<double> decision;
  std::string method;
};

/// Mutually nondominated points, in discovery order.
struct ParetoSet {
  std::vector<ParetoPoint> points;
  // Points whose theta duplicated an archived one; kept for reporting only.
  std::vector<ParetoPoint> alternates;
};

struct ParetoOptions {
  double tol = 1e-6;
  // Slack on an objective fixed at its optimum in later lexicographic stages.
  double lex_delta = 1e-6;
  // Worker threads for independent grid subproblems (1 = sequential).
  unsigned workers = 1;
  std::shared_ptr<const milp::MilpBackend> backend = milp::default_backend();
};

/// min w . theta. Throws kNonpositiveWeight unless all weights are > 0 and
/// kInfeasible / kUnbounded when the program has no optimum.
ParetoPoint weighted_sum(const TriObjectiveMilp& milp, const std::array<double, 3>& weights,
                         const ParetoOptions& options = {});

/// Hierarchical optimization: each objective in `order` is minimized with the
/// earlier ones held within lex_delta of their optima. Throws kInvalidOrder for
/// a non-permutation.
ParetoPoint lexicographic(const TriObjectiveMilp& milp, const std::array<Component, 3>& order,
                          const ParetoOptions& options = {});

struct GridSize {
  std::size_t mid = 1;
  std::size_t hi = 1;
};

/// Two-stage epsilon-constraint sweep. Bounds on theta_mid and theta_hi run
/// over a grid between the lexicographic ideal and anti-ideal; each cell
/// minimizes theta_lo, then theta_mid + theta_hi with theta_lo held.
ParetoSet epsilon_constraint_enumerate(const TriObjectiveMilp& milp, const GridSize& grid,
                                       const ParetoOptions& options = {});

/// True if a <= b componentwise with at least one component smaller by more
/// than tol * max(1, |a_k|, |b_k|).
bool dominates(const std::array<double, 3>& a, const std::array<double, 3>& b, double tol);

/// Drops dominated points and duplicate triples (first occurrence wins), with
/// the same scaled tolerance as dominates().
ParetoSet filter_nondominated(const std::vector<ParetoPoint>& points, double tol = 1e-6);

/// CSV with columns method, theta_lo, theta_mid, theta_hi, then one column
/// per crisp variable name.
void write_csv(std::ostream& out, const ParetoSet& set, const milp::LinearProgram& program);

}  // namespace fzmm
