#include <algorithm>
#include <cmath>
#include <optional>

#include "fzmm/error.hpp"
#include "fzmm/milp.hpp"

namespace fzmm::milp {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr double kRatioTieTol = 1e-12;

// Original variable j equals offset + x'[plus] - x'[minus] (absent columns are -1).
struct ColumnMap {
  double offset = 0.0;
  long plus = -1;
  long minus = -1;
};

enum class ColumnKind { kStructural, kSlack, kArtificial };

// Dense simplex tableau; row `m` holds reduced costs, its rhs holds -objective.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), stride_(cols + 1), data_((rows + 1) * (cols + 1), 0.0) {}

  double& at(std::size_t i, std::size_t j) { return data_[i * stride_ + j]; }
  double at(std::size_t i, std::size_t j) const { return data_[i * stride_ + j]; }
  double& rhs(std::size_t i) { return data_[i * stride_ + n_]; }
  double rhs(std::size_t i) const { return data_[i * stride_ + n_]; }
  double* row(std::size_t i) { return data_.data() + i * stride_; }

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  void pivot(std::size_t r, std::size_t c) {
    double* pr = row(r);
    const double inv = 1.0 / pr[c];
    for (std::size_t j = 0; j < stride_; ++j) pr[j] *= inv;
    pr[c] = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      double* pi = row(i);
      const double factor = pi[c];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < stride_; ++j) pi[j] -= factor * pr[j];
      pi[c] = 0.0;
    }
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t stride_;
  std::vector<double> data_;
};

enum class PhaseResult { kOptimal, kUnbounded };

class SimplexSolver {
 public:
  SimplexSolver(const LinearProgram& lp, const SolverOptions& options) : lp_(lp), options_(options) {}

  MilpSolution solve() {
    MilpSolution result;
    result.node_count = 1;
    if (!build()) {
      result.status = SolveStatus::kInfeasible;
      return result;
    }

    // Phase 1: minimize the sum of artificials.
    std::vector<double> phase1_cost(kinds_.size(), 0.0);
    for (std::size_t j = 0; j < kinds_.size(); ++j) {
      if (kinds_[j] == ColumnKind::kArtificial) phase1_cost[j] = 1.0;
    }
    load_costs(phase1_cost);
    run(/*allow_artificial=*/true);
    if (-tab_->rhs(tab_->rows()) > options_.feasibility_tol) {
      result.status = SolveStatus::kInfeasible;
      return result;
    }
    drive_out_artificials();

    load_costs(cost_);
    if (run(/*allow_artificial=*/false) == PhaseResult::kUnbounded) {
      result.status = SolveStatus::kUnbounded;
      return result;
    }

    result.status = SolveStatus::kOptimal;
    result.point = extract_point();
    result.objective = lp_.objective_value(result.point);
    result.row_duals = extract_duals();
    return result;
  }

 private:
  // Returns false if some variable has an empty domain.
  bool build() {
    const std::size_t n = lp_.num_variables();
    maps_.assign(n, {});
    std::vector<double> struct_upper;
    for (std::size_t j = 0; j < n; ++j) {
      const double lo = lp_.lower()[j];
      const double up = lp_.upper()[j];
      const double c = lp_.costs()[j];
      ColumnMap& map = maps_[j];
      if (lo > up + options_.feasibility_tol) return false;
      if (std::isfinite(lo) && up <= lo) {
        map.offset = lo;
      } else if (std::isfinite(lo)) {
        map.offset = lo;
        map.plus = new_structural(c);
        struct_upper.push_back(up - lo);
      } else if (std::isfinite(up)) {
        map.offset = up;
        map.minus = new_structural(-c);
        struct_upper.push_back(kInf);
      } else {
        map.plus = new_structural(c);
        struct_upper.push_back(kInf);
        map.minus = new_structural(-c);
        struct_upper.push_back(kInf);
      }
    }
    const std::size_t n_struct = kinds_.size();

    // Transformed rows: coefficients over structural columns, sense, rhs.
    struct StdRow {
      std::vector<Entry> entries;
      RowSense sense;
      double rhs;
    };
    std::vector<StdRow> rows;
    for (const Row& row : lp_.rows()) {
      StdRow s{{}, row.sense, row.rhs};
      for (const Entry& e : row.entries) {
        const ColumnMap& map = maps_[e.column];
        s.rhs -= e.value * map.offset;
        if (map.plus >= 0) s.entries.push_back({static_cast<std::size_t>(map.plus), e.value});
        if (map.minus >= 0) s.entries.push_back({static_cast<std::size_t>(map.minus), -e.value});
      }
      rows.push_back(std::move(s));
    }
    original_rows_ = rows.size();
    for (std::size_t k = 0; k < n_struct; ++k) {
      if (std::isfinite(struct_upper[k])) {
        rows.push_back({{{k, 1.0}}, RowSense::kLessEqual, struct_upper[k]});
      }
    }

    // Normalize to nonnegative right-hand sides and add slack/artificial columns.
    const std::size_t m = rows.size();
    row_sign_.assign(m, 1.0);
    unit_column_.assign(m, 0);
    std::vector<long> slack(m, -1);
    std::vector<long> artificial(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
      StdRow& s = rows[i];
      if (s.rhs < 0.0) {
        row_sign_[i] = -1.0;
        s.rhs = -s.rhs;
        for (Entry& e : s.entries) e.value = -e.value;
        if (s.sense == RowSense::kLessEqual) {
          s.sense = RowSense::kGreaterEqual;
        } else if (s.sense == RowSense::kGreaterEqual) {
          s.sense = RowSense::kLessEqual;
        }
      }
      if (s.sense != RowSense::kEqual) slack[i] = new_column(ColumnKind::kSlack);
      if (s.sense != RowSense::kLessEqual) artificial[i] = new_column(ColumnKind::kArtificial);
    }
    cost_.resize(kinds_.size(), 0.0);

    tab_.emplace(m, kinds_.size());
    basis_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const StdRow& s = rows[i];
      for (const Entry& e : s.entries) tab_->at(i, e.column) += e.value;
      tab_->rhs(i) = s.rhs;
      if (slack[i] >= 0) {
        tab_->at(i, slack[i]) = s.sense == RowSense::kLessEqual ? 1.0 : -1.0;
      }
      if (artificial[i] >= 0) {
        tab_->at(i, artificial[i]) = 1.0;
        basis_[i] = static_cast<std::size_t>(artificial[i]);
      } else {
        basis_[i] = static_cast<std::size_t>(slack[i]);
      }
      unit_column_[i] = basis_[i];
    }
    return true;
  }

  long new_structural(double cost) {
    cost_.push_back(cost);
    return new_column(ColumnKind::kStructural);
  }

  long new_column(ColumnKind kind) {
    kinds_.push_back(kind);
    return static_cast<long>(kinds_.size() - 1);
  }

  void load_costs(const std::vector<double>& cost) {
    Tableau& t = *tab_;
    const std::size_t m = t.rows();
    double* d = t.row(m);
    for (std::size_t j = 0; j < t.cols(); ++j) d[j] = cost[j];
    t.rhs(m) = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      const double* r = t.row(i);
      for (std::size_t j = 0; j <= t.cols(); ++j) d[j] -= cb * r[j];
    }
    for (std::size_t i = 0; i < m; ++i) d[basis_[i]] = 0.0;
  }

  PhaseResult run(bool allow_artificial) {
    Tableau& t = *tab_;
    const std::size_t m = t.rows();
    int stall = 0;
    bool bland = false;
    for (std::size_t iter = 0;; ++iter) {
      if (iter >= options_.max_pivots) {
        throw Error(ErrorCode::kSolverFailure, "simplex pivot limit reached");
      }
      long enter = -1;
      double best = -kCostTol;
      for (std::size_t j = 0; j < t.cols(); ++j) {
        if (!allow_artificial && kinds_[j] == ColumnKind::kArtificial) continue;
        const double d = t.at(m, j);
        if (d < -kCostTol) {
          if (bland) {
            enter = static_cast<long>(j);
            break;
          }
          if (d < best) {
            best = d;
            enter = static_cast<long>(j);
          }
        }
      }
      if (enter < 0) return PhaseResult::kOptimal;
      const auto c = static_cast<std::size_t>(enter);

      long leave = -1;
      double best_ratio = kInf;
      for (std::size_t i = 0; i < m; ++i) {
        const double a = t.at(i, c);
        if (a <= kPivotTol) continue;
        const double ratio = std::max(0.0, t.rhs(i)) / a;
        if (leave < 0 || ratio < best_ratio - kRatioTieTol) {
          leave = static_cast<long>(i);
          best_ratio = ratio;
          continue;
        }
        if (ratio > best_ratio + kRatioTieTol) continue;
        const auto l = static_cast<std::size_t>(leave);
        const bool prefer = bland ? basis_[i] < basis_[l]
                                  : (a > t.at(l, c) || (a == t.at(l, c) && basis_[i] < basis_[l]));
        if (prefer) leave = static_cast<long>(i);
      }
      if (leave < 0) return PhaseResult::kUnbounded;

      const auto r = static_cast<std::size_t>(leave);
      t.pivot(r, c);
      basis_[r] = c;

      if (best_ratio <= kRatioTieTol) {
        if (++stall >= options_.degenerate_stall_limit) bland = true;
      } else {
        stall = 0;
        bland = false;
      }
    }
  }

  void drive_out_artificials() {
    Tableau& t = *tab_;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (kinds_[basis_[i]] != ColumnKind::kArtificial) continue;
      long best = -1;
      double best_abs = 1e-7;
      for (std::size_t j = 0; j < t.cols(); ++j) {
        if (kinds_[j] == ColumnKind::kArtificial) continue;
        const double a = std::abs(t.at(i, j));
        if (a > best_abs) {
          best_abs = a;
          best = static_cast<long>(j);
        }
      }
      // No candidate: the row is redundant and its artificial stays basic at zero.
      if (best >= 0) {
        t.pivot(i, static_cast<std::size_t>(best));
        basis_[i] = static_cast<std::size_t>(best);
      }
    }
  }

  std::vector<double> extract_point() const {
    const Tableau& t = *tab_;
    std::vector<double> value(t.cols(), 0.0);
    for (std::size_t i = 0; i < t.rows(); ++i) value[basis_[i]] = std::max(0.0, t.rhs(i));
    std::vector<double> point(lp_.num_variables());
    for (std::size_t j = 0; j < point.size(); ++j) {
      const ColumnMap& map = maps_[j];
      double x = map.offset;
      if (map.plus >= 0) x += value[map.plus];
      if (map.minus >= 0) x -= value[map.minus];
      point[j] = std::clamp(x, lp_.lower()[j], lp_.upper()[j]);
    }
    return point;
  }

  std::vector<double> extract_duals() const {
    const Tableau& t = *tab_;
    std::vector<double> duals(original_rows_);
    for (std::size_t i = 0; i < original_rows_; ++i) {
      duals[i] = -row_sign_[i] * t.at(t.rows(), unit_column_[i]);
    }
    return duals;
  }

  const LinearProgram& lp_;
  const SolverOptions& options_;
  std::vector<ColumnMap> maps_;
  std::vector<ColumnKind> kinds_;
  std::vector<double> cost_;
  std::vector<double> row_sign_;
  std::vector<std::size_t> unit_column_;
  std::vector<std::size_t> basis_;
  std::size_t original_rows_ = 0;
  std::optional<Tableau> tab_;
};

}  // namespace

MilpSolution solve_lp(const LinearProgram& lp, const SolverOptions& options) {
  lp.validate();
  return SimplexSolver(lp, options).solve();
}

}  // namespace fzmm::milp
