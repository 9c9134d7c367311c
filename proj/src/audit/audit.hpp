#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fzmm/ccflp.hpp"
#include "fzmm/model.hpp"

namespace fzmm::audit {

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  std::vector<std::string> details;
};

struct AuditOptions {
  std::string data_dir;
  std::uint64_t seed = 20261019;
  unsigned workers = 1;
};

// Optimum of a minimax model with crisp data, by trying every binary vector
// and solving the remaining LP directly. nullopt if no vector is feasible.
std::optional<double> crisp_minimax_by_enumeration(const FuzzyMinimaxModel& model);

// Random minimax model with degenerate data, bounded and feasible by construction.
FuzzyMinimaxModel random_crisp_minimax(std::uint64_t seed, std::size_t binaries, std::size_t continuous);

// Two binaries, z0 + z1 = 1, rows (1,2,3) z0 and (0,3,3) z1.
FuzzyMinimaxModel two_point_frontier_model();

// Published optima of the bundled example; (a) and (b) share a triple.
struct ReportedTriple {
  std::string label;
  Tfn theta;
};
std::vector<ReportedTriple> reported_fuzzy_triples();

CheckResult check_algebra(std::uint64_t seed);
CheckResult check_theta(std::uint64_t seed);
CheckResult check_crisp_oracle(std::uint64_t seed);
CheckResult check_example_crisp(const CcflpInstance& instance);
CheckResult check_reported_triples();
CheckResult check_triple_feasibility(const CcflpInstance& instance);
CheckResult check_pareto_machinery();
CheckResult check_example_fuzzy(const CcflpInstance& instance, unsigned workers);

// Runs every check; loads the example instance from data_dir.
std::vector<CheckResult> run_all(const AuditOptions& options, std::ostream* progress = nullptr);

void print(std::ostream& out, const CheckResult& result);

}  // namespace fzmm::audit
