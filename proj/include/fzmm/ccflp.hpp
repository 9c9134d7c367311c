#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fzmm/milp.hpp"
#include "fzmm/model.hpp"
#include "fzmm/reformulate.hpp"

namespace fzmm {

/// Capacitated center facility location data. Customers are indexed
/// 0..n-1 and facilities 0..m-1; when n == m, customer k and facility k are
/// the same site.
struct CcflpInstance {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Tfn> demand;               // n
  std::vector<Tfn> capacity;             // m
  std::vector<Tfn> setup_cost;           // m
  std::vector<std::vector<Tfn>> cost;    // n x m allocation costs

  /// Dimension and sign problems; empty when the instance is valid.
  std::vector<std::string> problems() const;
  /// Throws Error(kParseError) listing problems().
  void validate() const;
};

/// Which endpoint of every fuzzy datum a crisp model uses.
using Selector = Component;

struct CrispCcflpModel {
  milp::LinearProgram program;
  std::vector<std::size_t> binaries;
  std::vector<std::vector<std::size_t>> flow;  // [customer][facility] column
  std::vector<std::size_t> open;               // facility column
  std::size_t theta = 0;
};

/// min theta s.t. sum_j c_ij x_ij + sum_j f_j y_j <= theta for every customer,
/// sum_j x_ij = d_i, sum_i x_ij <= u_j y_j, all data at `selector`.
CrispCcflpModel build_crisp_model(const CcflpInstance& instance, Selector selector);

enum class CapacityVariant {
  kDerived,  // sum_i x_ij <~ u_j y_j
  kLiteral,  // sum_i d_i x_ij <~ u_j y_j (componentwise d^k x^k, since d >= 0)
};

std::string to_string(CapacityVariant variant);
/// "derived" or "literal"; throws kUnknownVariant otherwise.
CapacityVariant parse_variant(const std::string& text);

struct FuzzyCcflpModel {
  FuzzyMinimaxModel model;
  std::vector<std::vector<VariableRef>> flow;  // [customer][facility]
  std::vector<VariableRef> open;
  CapacityVariant variant = CapacityVariant::kDerived;
};

FuzzyCcflpModel build_fuzzy_model(const CcflpInstance& instance, CapacityVariant variant);

struct AssignmentNetwork {
  std::vector<std::size_t> open_facilities;
  std::map<std::pair<std::size_t, std::size_t>, Tfn> flows;  // (customer, facility)
  Tfn theta;
};

/// Open facilities and flows whose hi component exceeds flow_tol. Throws
/// kInfeasiblePoint if the assignment violates the model (e.g. flow into a
/// closed facility).
AssignmentNetwork extract_network(const FuzzyCcflpModel& built, const FuzzyAssignment& assignment,
                                  const Tfn& theta, double tol = 1e-6, double flow_tol = 1e-4);

AssignmentNetwork extract_crisp_network(const CrispCcflpModel& built, std::span<const double> point,
                                        double flow_tol = 1e-4);

/// Graphviz rendering: open facilities filled, edges labelled with flows.
/// Self-service flows (customer k to facility k on shared sites) are not drawn.
void write_dot(std::ostream& out, const CcflpInstance& instance, const AssignmentNetwork& network,
               const std::string& title);

/// Seeded random instance with enough capacity for every component of the
/// demand. `crisp` makes every datum degenerate.
CcflpInstance random_instance(std::size_t n, std::size_t m, std::uint64_t seed, bool crisp);

}  // namespace fzmm
