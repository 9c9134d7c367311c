#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fzmm/milp.hpp"
#include "fzmm/model.hpp"

namespace fzmm {

/// Index into a (lo, mid, hi) triple.
enum class Component : std::size_t { kLo = 0, kMid = 1, kHi = 2 };

std::string to_string(Component component);

/// Where a crisp column of the reformulated program comes from.
struct CrispOrigin {
  enum class Kind { kXLower, kXMid, kXUpper, kThetaLower, kThetaMid, kThetaUpper, kBinaryY };
  Kind kind = Kind::kXLower;
  std::size_t source = 0;  // fuzzy-model variable id; unused for theta columns
};

struct CrispVariable {
  std::size_t id = 0;
  bool binary = false;
  double lower = 0.0;
  double upper = milp::kInf;
  CrispOrigin origin;
};

using LinearForm = std::vector<milp::Entry>;
using ComponentForms = std::array<LinearForm, 3>;

/// Crisp three-objective program: v-min (theta_lo, theta_mid, theta_hi).
/// `program` carries the rows and bounds with an all-zero cost vector;
/// scalarizations install their own costs on a copy.
struct TriObjectiveMilp {
  milp::LinearProgram program;
  std::vector<CrispVariable> variables;
  std::vector<std::size_t> binaries;
  std::array<std::size_t, 3> theta{};
  // Per fuzzy-model variable: its (lo, mid, hi) columns, or the same binary
  // column three times.
  std::vector<std::array<std::size_t, 3>> source_columns;
  std::size_t minimax_row_count = 0;
  std::size_t constraint_count = 0;

  std::size_t theta_column(Component c) const { return theta[static_cast<std::size_t>(c)]; }
  std::array<double, 3> theta_value(std::span<const double> point) const;
  // Componentwise maximum of the objective rows at `point`: the smallest theta
  // the decision supports. Later optimization stages may leave the theta
  // columns slightly above it.
  std::array<double, 3> attained_theta(std::span<const double> point) const;
};

/// Crisp (lo, mid, hi) linear forms of c * x for a nonnegative fuzzy variable
/// x with columns `x` = {x_lo, x_mid, x_hi}; the sign pattern of c decides the
/// pairing of endpoints.
ComponentForms lower_product_components(const Tfn& c, const std::array<std::size_t, 3>& x);

/// Mechanical translation of a fuzzy minimax model into the crisp
/// three-objective MILP. Rows are named mo1_j ... mo12_i; see README.
TriObjectiveMilp reformulate(const FuzzyMinimaxModel& model);

struct LiftedSolution {
  FuzzyAssignment assignment;
  Tfn theta;
};

/// Regroups a crisp point into fuzzy values. Throws kInfeasiblePoint if the
/// point violates any row, bound, or binary integrality by more than `tol`.
LiftedSolution lift_solution(const TriObjectiveMilp& milp, std::span<const double> point,
                             double tol = 1e-6);

/// The program with objective sum_k weights[k] * theta_k installed.
milp::LinearProgram scalarize(const TriObjectiveMilp& milp, const std::array<double, 3>& weights);

}  // namespace fzmm
