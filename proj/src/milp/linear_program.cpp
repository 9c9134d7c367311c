#include <algorithm>
#include <cmath>

#include "fzmm/error.hpp"
#include "fzmm/milp.hpp"

namespace fzmm::milp {

std::size_t LinearProgram::add_variable(double lower, double upper, double cost, std::string name) {
  cost_.push_back(cost);
  lower_.push_back(lower);
  upper_.push_back(upper);
  if (name.empty()) name = "v" + std::to_string(cost_.size() - 1);
  names_.push_back(std::move(name));
  return cost_.size() - 1;
}

std::size_t LinearProgram::add_row(std::vector<Entry> entries, RowSense sense, double rhs,
                                   std::string name) {
  // Merge duplicate columns so every row is a proper sparse vector.
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.column < b.column; });
  std::vector<Entry> merged;
  for (const Entry& e : entries) {
    if (!merged.empty() && merged.back().column == e.column) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.value == 0.0; });
  rows_.push_back({std::move(merged), sense, rhs, std::move(name)});
  return rows_.size() - 1;
}

void LinearProgram::clear_costs() {
  std::fill(cost_.begin(), cost_.end(), 0.0);
  offset_ = 0.0;
}

void LinearProgram::set_bounds(std::size_t column, double lower, double upper) {
  lower_.at(column) = lower;
  upper_.at(column) = upper;
}

double LinearProgram::objective_value(std::span<const double> point) const {
  double value = offset_;
  for (std::size_t j = 0; j < cost_.size(); ++j) value += cost_[j] * point[j];
  return value;
}

double LinearProgram::row_activity(std::size_t row, std::span<const double> point) const {
  double sum = 0.0;
  for (const Entry& e : rows_.at(row).entries) sum += e.value * point[e.column];
  return sum;
}

void LinearProgram::validate() const {
  const auto bad = [](const std::string& what) { throw Error(ErrorCode::kMalformedProgram, what); };
  for (std::size_t j = 0; j < cost_.size(); ++j) {
    if (!std::isfinite(cost_[j])) bad("non-finite cost on " + names_[j]);
    if (std::isnan(lower_[j]) || std::isnan(upper_[j]) || lower_[j] == kInf || upper_[j] == -kInf) {
      bad("invalid bounds on " + names_[j]);
    }
  }
  if (!std::isfinite(offset_)) bad("non-finite objective offset");
  for (const Row& row : rows_) {
    if (!std::isfinite(row.rhs)) bad("non-finite right-hand side in row " + row.name);
    for (const Entry& e : row.entries) {
      if (e.column >= cost_.size()) bad("row " + row.name + " references a missing column");
      if (!std::isfinite(e.value)) bad("non-finite coefficient in row " + row.name);
    }
  }
}

double max_violation(const LinearProgram& lp, std::span<const double> point) {
  if (point.size() != lp.num_variables()) {
    throw Error(ErrorCode::kMalformedProgram, "point dimension does not match the program");
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    worst = std::max(worst, lp.lower()[j] - point[j]);
    worst = std::max(worst, point[j] - lp.upper()[j]);
  }
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const Row& row = lp.rows()[i];
    const double activity = lp.row_activity(i, point);
    switch (row.sense) {
      case RowSense::kLessEqual: worst = std::max(worst, activity - row.rhs); break;
      case RowSense::kGreaterEqual: worst = std::max(worst, row.rhs - activity); break;
      case RowSense::kEqual: worst = std::max(worst, std::abs(activity - row.rhs)); break;
    }
  }
  return worst;
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "Optimal";
    case SolveStatus::kInfeasible: return "Infeasible";
    case SolveStatus::kUnbounded: return "Unbounded";
  }
  return "Unknown";
}

}  // namespace fzmm::milp
