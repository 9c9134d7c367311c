#include <doctest.h>

#include <sstream>

#include "fzmm/ccflp.hpp"
#include "fzmm/error.hpp"
#include "fzmm/json_io.hpp"
#include "fzmm/pareto.hpp"

using namespace fzmm;

namespace {

CcflpInstance example() { return load_instance(std::string(FZMM_DATA_DIR) + "/example1.json"); }

CcflpInstance toy() {
  CcflpInstance inst;
  inst.n = 1;
  inst.m = 1;
  inst.demand = {Tfn::crisp(5)};
  inst.capacity = {Tfn::crisp(10)};
  inst.setup_cost = {Tfn::crisp(1)};
  inst.cost = {{Tfn::crisp(2)}};
  return inst;
}

}  // namespace

TEST_CASE("model structure for the bundled example") {
  const CcflpInstance inst = example();
  const FuzzyCcflpModel built = build_fuzzy_model(inst, CapacityVariant::kDerived);
  std::size_t fuzzy = 0;
  std::size_t binary = 0;
  for (const auto& v : built.model.variables()) {
    (v.kind == VariableKind::kCrispBinary ? binary : fuzzy) += 1;
  }
  CHECK(fuzzy == 36);
  CHECK(binary == 6);
  CHECK(built.model.minimax_rows().size() == 6);
  std::size_t equalities = 0;
  for (const auto& c : built.model.constraints()) equalities += c.relation == FuzzyRelation::kEqual;
  CHECK(equalities == 6);
  CHECK(built.model.constraints().size() == 12);
}

TEST_CASE("single site toy") {
  const CcflpInstance inst = toy();
  const CrispCcflpModel crisp = build_crisp_model(inst, Component::kMid);
  const auto sol = milp::solve_milp(crisp.program, crisp.binaries);
  REQUIRE(sol.status == milp::SolveStatus::kOptimal);
  CHECK(sol.objective == doctest::Approx(11));

  const FuzzyCcflpModel built = build_fuzzy_model(inst, CapacityVariant::kDerived);
  const TriObjectiveMilp tri = reformulate(built.model);
  const ParetoPoint p = weighted_sum(tri, {1, 1, 1});
  CHECK(p.theta[0] == doctest::Approx(11));
  CHECK(p.theta[2] == doctest::Approx(11));

  const LiftedSolution lifted = lift_solution(tri, p.decision);
  const AssignmentNetwork net = extract_network(built, lifted.assignment, lifted.theta);
  CHECK(net.open_facilities == std::vector<std::size_t>{0});
  REQUIRE(net.flows.size() == 1);
  CHECK(net.flows.begin()->second == Tfn::crisp(5));
}

TEST_CASE("flow through a closed facility is rejected") {
  const CcflpInstance inst = toy();
  const FuzzyCcflpModel built = build_fuzzy_model(inst, CapacityVariant::kDerived);
  FuzzyAssignment a(built.model.variables().size());
  a[built.flow[0][0].id] = Tfn::crisp(5);
  a[built.open[0].id] = Tfn::crisp(0);
  CHECK_THROWS_AS(extract_network(built, a, Tfn::crisp(10)), Error);
}

TEST_CASE("degenerate data: fuzzy mid optimum equals the crisp optimum") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const std::size_t m = 2 + (seed / 2) % 3;
    const CcflpInstance inst = random_instance(n, m, seed, true);
    const CrispCcflpModel crisp = build_crisp_model(inst, Component::kMid);
    const auto expected = milp::solve_milp(crisp.program, crisp.binaries);
    const TriObjectiveMilp tri = reformulate(build_fuzzy_model(inst, CapacityVariant::kDerived).model);
    const auto got = milp::solve_milp(scalarize(tri, {0, 1, 0}), tri.binaries);
    REQUIRE(expected.status == milp::SolveStatus::kOptimal);
    REQUIRE(got.status == milp::SolveStatus::kOptimal);
    CHECK(got.objective == doctest::Approx(expected.objective).epsilon(1e-9));
  }
}

TEST_CASE("variants and validation") {
  CHECK(parse_variant("derived") == CapacityVariant::kDerived);
  CHECK(parse_variant("literal") == CapacityVariant::kLiteral);
  CHECK_THROWS_AS(parse_variant("other"), Error);
  CcflpInstance bad = toy();
  bad.cost[0].clear();
  CHECK_FALSE(bad.problems().empty());
  CHECK_THROWS_AS(build_crisp_model(bad, Component::kMid), Error);
}

TEST_CASE("dot output") {
  const CcflpInstance inst = toy();
  AssignmentNetwork net;
  net.open_facilities = {0};
  net.flows.emplace(std::pair<std::size_t, std::size_t>{0, 0}, Tfn(1, 2, 3));
  net.theta = Tfn(4, 5, 6);
  std::ostringstream out;
  write_dot(out, inst, net, "t");
  const std::string s = out.str();
  CHECK(s.rfind("graph \"t\" {", 0) == 0);
  CHECK(s.find("theta = (4.00,5.00,6.00)") != std::string::npos);
  // One shared site: the self-flow is not drawn.
  CHECK(s.find("--") == std::string::npos);
}

TEST_CASE("random instances are seeded and valid") {
  const CcflpInstance a = random_instance(4, 3, 99, false);
  const CcflpInstance b = random_instance(4, 3, 99, false);
  CHECK(a.problems().empty());
  CHECK(a.demand == b.demand);
  CHECK(a.cost == b.cost);
}
