#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fzmm::milp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

struct Entry {
  std::size_t column = 0;
  double value = 0.0;
};

struct Row {
  std::vector<Entry> entries;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
  std::string name;
};

/// min c'x + offset  s.t.  rows, lower <= x <= upper.
class LinearProgram {
 public:
  std::size_t add_variable(double lower, double upper, double cost = 0.0, std::string name = {});
  std::size_t add_row(std::vector<Entry> entries, RowSense sense, double rhs, std::string name = {});

  void set_cost(std::size_t column, double cost) { cost_.at(column) = cost; }
  void clear_costs();
  void set_bounds(std::size_t column, double lower, double upper);
  void set_objective_offset(double offset) { offset_ = offset; }

  std::size_t num_variables() const noexcept { return cost_.size(); }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const std::vector<double>& costs() const noexcept { return cost_; }
  const std::vector<double>& lower() const noexcept { return lower_; }
  const std::vector<double>& upper() const noexcept { return upper_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  double objective_offset() const noexcept { return offset_; }

  double objective_value(std::span<const double> point) const;
  double row_activity(std::size_t row, std::span<const double> point) const;

  /// Throws Error(kMalformedProgram) on out-of-range columns, non-finite
  /// coefficients or inverted infinite bounds.
  void validate() const;

 private:
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<std::string> names_;
  std::vector<Row> rows_;
  double offset_ = 0.0;
};

/// Largest row or bound violation of `point`.
double max_violation(const LinearProgram& lp, std::span<const double> point);

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

std::string to_string(SolveStatus status);

struct MilpSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  std::vector<double> point;
  double objective = 0.0;
  std::size_t node_count = 0;
  // Row duals of the final basis (LP solves only): y with c - A'y the reduced
  // costs. Empty for MILP results.
  std::vector<double> row_duals;
};

struct SolverOptions {
  double feasibility_tol = 1e-6;
  double integrality_tol = 1e-6;
  double objective_abs_tol = 1e-9;
  double objective_rel_tol = 1e-6;
  // Consecutive degenerate pivots tolerated before switching to Bland's rule.
  int degenerate_stall_limit = 50;
  std::size_t max_pivots = 200000;
  std::size_t max_nodes = 1000000;
  // > 0 writes one line per branch-and-bound node to `log`.
  int verbosity = 0;
  std::ostream* log = nullptr;
};

/// Primal two-phase simplex on a dense tableau.
MilpSolution solve_lp(const LinearProgram& lp, const SolverOptions& options = {});

/// Best-first branch-and-bound over the listed binary columns.
MilpSolution solve_milp(const LinearProgram& lp, std::span<const std::size_t> binaries,
                        const SolverOptions& options = {});

/// Seam for substituting an external MILP solver.
class MilpBackend {
 public:
  virtual ~MilpBackend() = default;
  virtual std::string name() const = 0;
  virtual MilpSolution solve(const LinearProgram& lp,
                             std::span<const std::size_t> binaries) const = 0;
};

class BranchAndBoundBackend final : public MilpBackend {
 public:
  explicit BranchAndBoundBackend(SolverOptions options = {}) : options_(options) {}
  std::string name() const override { return "branch-and-bound"; }
  MilpSolution solve(const LinearProgram& lp,
                     std::span<const std::size_t> binaries) const override {
    return solve_milp(lp, binaries, options_);
  }
  const SolverOptions& options() const noexcept { return options_; }

 private:
  SolverOptions options_;
};

std::shared_ptr<const MilpBackend> default_backend();

}  // namespace fzmm::milp
