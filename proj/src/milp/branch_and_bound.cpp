#include <algorithm>
#include <cmath>
#include <ostream>
#include <queue>

#include "fzmm/error.hpp"
#include "fzmm/milp.hpp"

namespace fzmm::milp {
namespace {

struct Fixing {
  std::size_t column;
  double value;
};

struct Node {
  double bound;
  std::size_t id;
  std::vector<Fixing> fixings;
};

// Best bound first; equal bounds in creation order.
struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.id > b.id;
  }
};

class BranchAndBound {
 public:
  BranchAndBound(const LinearProgram& lp, std::span<const std::size_t> binaries,
                 const SolverOptions& options)
      : base_(lp), binaries_(binaries.begin(), binaries.end()), options_(options) {
    for (std::size_t b : binaries_) {
      if (b >= base_.num_variables()) {
        throw Error(ErrorCode::kMalformedProgram, "binary index out of range");
      }
      base_.set_bounds(b, std::max(0.0, base_.lower()[b]), std::min(1.0, base_.upper()[b]));
    }
  }

  MilpSolution solve() {
    MilpSolution result;
    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    open.push({-kInf, next_id_++, {}});
    bool root = true;

    while (!open.empty()) {
      Node node = open.top();
      open.pop();
      if (has_incumbent_ && !improves(node.bound)) continue;
      if (nodes_ >= options_.max_nodes) {
        throw Error(ErrorCode::kSolverFailure, "branch-and-bound node limit reached");
      }

      const MilpSolution relax = solve_node(node.fixings);
      ++nodes_;
      log(node, relax);
      if (root) {
        root = false;
        if (relax.status == SolveStatus::kUnbounded) {
          result.status = SolveStatus::kUnbounded;
          result.node_count = nodes_;
          return result;
        }
      }
      if (relax.status != SolveStatus::kOptimal) continue;
      if (has_incumbent_ && !improves(relax.objective)) continue;

      const long branch = pick_branch(relax.point);
      if (branch < 0) {
        accept(node.fixings, relax);
        continue;
      }
      const auto column = static_cast<std::size_t>(branch);
      for (double value : {0.0, 1.0}) {
        Node child{relax.objective, next_id_++, node.fixings};
        child.fixings.push_back({column, value});
        open.push(std::move(child));
      }
    }

    result.node_count = nodes_;
    if (!has_incumbent_) {
      result.status = SolveStatus::kInfeasible;
      return result;
    }
    result.status = SolveStatus::kOptimal;
    result.point = std::move(incumbent_);
    result.objective = incumbent_value_;
    return result;
  }

 private:
  bool improves(double bound) const {
    const double tol =
        options_.objective_abs_tol + options_.objective_rel_tol * std::abs(incumbent_value_);
    return bound < incumbent_value_ - tol;
  }

  MilpSolution solve_node(const std::vector<Fixing>& fixings) {
    LinearProgram lp = base_;
    for (const Fixing& f : fixings) lp.set_bounds(f.column, f.value, f.value);
    return solve_lp(lp, options_);
  }

  // Most fractional binary, lowest index on ties; -1 when all are integral.
  long pick_branch(const std::vector<double>& point) const {
    long best = -1;
    double best_frac = 0.0;
    for (std::size_t b : binaries_) {
      const double frac = std::min(point[b], 1.0 - point[b]);
      if (frac <= options_.integrality_tol) continue;
      const bool tie = std::abs(frac - best_frac) <= 1e-12;
      if (best < 0 || (!tie && frac > best_frac) || (tie && b < static_cast<std::size_t>(best))) {
        best = static_cast<long>(b);
        best_frac = frac;
      }
    }
    return best;
  }

  void accept(const std::vector<Fixing>& fixings, const MilpSolution& relax) {
    // Re-solve with every binary pinned so the reported point has exact 0/1
    // values and satisfies the rows without rounding drift.
    MilpSolution exact = relax;
    const bool already_exact = std::all_of(binaries_.begin(), binaries_.end(), [&](std::size_t b) {
      return relax.point[b] == 0.0 || relax.point[b] == 1.0;
    });
    if (!already_exact) {
      std::vector<Fixing> pinned = fixings;
      for (std::size_t b : binaries_) pinned.push_back({b, std::round(relax.point[b])});
      exact = solve_node(pinned);
      if (exact.status != SolveStatus::kOptimal) return;
    }
    if (has_incumbent_ && !improves(exact.objective)) return;
    has_incumbent_ = true;
    incumbent_value_ = exact.objective;
    incumbent_ = std::move(exact.point);
  }

  void log(const Node& node, const MilpSolution& relax) const {
    if (options_.verbosity <= 0 || options_.log == nullptr) return;
    *options_.log << "node " << node.id << " depth " << node.fixings.size() << " status "
                  << to_string(relax.status);
    if (relax.status == SolveStatus::kOptimal) *options_.log << " bound " << relax.objective;
    if (has_incumbent_) *options_.log << " incumbent " << incumbent_value_;
    *options_.log << '\n';
  }

  LinearProgram base_;
  std::vector<std::size_t> binaries_;
  const SolverOptions& options_;
  std::size_t next_id_ = 0;
  std::size_t nodes_ = 0;
  bool has_incumbent_ = false;
  double incumbent_value_ = kInf;
  std::vector<double> incumbent_;
};

}  // namespace

MilpSolution solve_milp(const LinearProgram& lp, std::span<const std::size_t> binaries,
                        const SolverOptions& options) {
  lp.validate();
  return BranchAndBound(lp, binaries, options).solve();
}

std::shared_ptr<const MilpBackend> default_backend() {
  static const auto backend = std::make_shared<const BranchAndBoundBackend>();
  return backend;
}

}  // namespace fzmm::milp
