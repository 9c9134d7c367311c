#include <doctest.h>

#include <set>
#include <sstream>

#include "audit.hpp"
#include "fzmm/ccflp.hpp"
#include "fzmm/error.hpp"
#include "fzmm/pareto.hpp"

using namespace fzmm;

namespace {

ParetoPoint point(double a, double b, double c) { return {{a, b, c}, {}, "test"}; }

bool on_two_point_frontier(const std::array<double, 3>& t) {
  const auto near = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (std::abs(a[k] - b[k]) > 1e-6) return false;
    }
    return true;
  };
  return near(t, {1, 2, 3}) || near(t, {0, 3, 3});
}

}  // namespace

TEST_CASE("dominance and filtering") {
  using T = std::array<double, 3>;
  CHECK(dominates(T{1, 2, 3}, T{1, 2, 4}, 1e-6));
  CHECK_FALSE(dominates(T{1, 2, 3}, T{1, 2, 3}, 1e-6));
  CHECK_FALSE(dominates(T{1, 2, 3}, T{0, 3, 3}, 1e-6));
  CHECK_FALSE(dominates(T{1000, 2, 3}, T{1000.0001, 2, 3}, 1e-6));

  const ParetoSet s = filter_nondominated(
      {point(1, 2, 3), point(1, 2, 4), point(0, 3, 3), point(1, 2, 3 + 1e-9), point(2, 2, 2)});
  REQUIRE(s.points.size() == 3);
  CHECK(s.points[0].theta == std::array<double, 3>{1, 2, 3});
  CHECK(s.points[1].theta == std::array<double, 3>{0, 3, 3});
  CHECK(s.points[2].theta == std::array<double, 3>{2, 2, 2});
  CHECK(s.alternates.size() == 1);
}

TEST_CASE("reported triples are mutually nondominated") {
  std::vector<ParetoPoint> pts;
  for (const auto& t : audit::reported_fuzzy_triples()) pts.push_back(point(t.theta.lo(), t.theta.mid(), t.theta.hi()));
  const ParetoSet s = filter_nondominated(pts);
  CHECK(s.points.size() == 3);
  CHECK(s.alternates.size() == 1);
}

TEST_CASE("weighted sum") {
  const TriObjectiveMilp tri = reformulate(audit::two_point_frontier_model());
  CHECK_THROWS_AS(weighted_sum(tri, {1, 0, 0}), Error);
  CHECK_THROWS_AS(weighted_sum(tri, {1, -1, 1}), Error);

  // Both frontier points have sum 6; either is a valid answer.
  const ParetoPoint p = weighted_sum(tri, {1, 1, 1});
  CHECK(on_two_point_frontier(p.theta));
  CHECK(p.theta[0] + p.theta[1] + p.theta[2] == doctest::Approx(6));

  CHECK(on_two_point_frontier(weighted_sum(tri, {10, 1, 1}).theta));
  CHECK(weighted_sum(tri, {10, 1, 1}).theta[0] == doctest::Approx(0));
  CHECK(weighted_sum(tri, {1, 10, 1}).theta[1] == doctest::Approx(2));
}

TEST_CASE("lexicographic") {
  const TriObjectiveMilp tri = reformulate(audit::two_point_frontier_model());
  const ParetoPoint lo_first = lexicographic(tri, {Component::kLo, Component::kMid, Component::kHi});
  CHECK(lo_first.theta[0] == doctest::Approx(0).epsilon(1e-6));
  CHECK(lo_first.theta[1] == doctest::Approx(3));
  const ParetoPoint mid_first = lexicographic(tri, {Component::kMid, Component::kLo, Component::kHi});
  CHECK(mid_first.theta[1] == doctest::Approx(2));
  CHECK(mid_first.theta[0] == doctest::Approx(1));
  CHECK_THROWS_AS(lexicographic(tri, {Component::kLo, Component::kLo, Component::kHi}), Error);
  // Decisions carry the attained objective in the theta columns.
  CHECK(mid_first.decision[tri.theta[1]] == doctest::Approx(2));
}

TEST_CASE("epsilon-constraint sweep") {
  const TriObjectiveMilp tri = reformulate(audit::two_point_frontier_model());
  const ParetoSet s = epsilon_constraint_enumerate(tri, {3, 3});
  std::set<std::array<double, 3>> got;
  for (const auto& p : s.points) {
    CHECK(on_two_point_frontier(p.theta));
    got.insert(p.theta);
  }
  CHECK(got.size() == 2);

  SUBCASE("crisp data gives a single point") {
    const CcflpInstance inst = random_instance(3, 3, 8, true);
    const TriObjectiveMilp crisp = reformulate(build_fuzzy_model(inst, CapacityVariant::kDerived).model);
    const ParetoSet one = epsilon_constraint_enumerate(crisp, {3, 3});
    REQUIRE(one.points.size() == 1);
    CHECK(one.points[0].theta[0] == doctest::Approx(one.points[0].theta[2]));
  }
}

TEST_CASE("sweep is independent of the worker count") {
  const CcflpInstance inst = random_instance(3, 3, 21, false);
  const TriObjectiveMilp tri = reformulate(build_fuzzy_model(inst, CapacityVariant::kDerived).model);
  ParetoOptions serial;
  ParetoOptions parallel;
  parallel.workers = 4;
  const ParetoSet a = epsilon_constraint_enumerate(tri, {3, 3}, serial);
  const ParetoSet b = epsilon_constraint_enumerate(tri, {3, 3}, parallel);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    CHECK(a.points[k].theta == b.points[k].theta);
    CHECK(a.points[k].method == b.points[k].method);
  }
  for (std::size_t x = 0; x < a.points.size(); ++x) {
    for (std::size_t y = 0; y < a.points.size(); ++y) {
      CHECK_FALSE(dominates(a.points[x].theta, a.points[y].theta, 1e-6));
    }
  }
}

TEST_CASE("csv output") {
  const TriObjectiveMilp tri = reformulate(audit::two_point_frontier_model());
  ParetoSet s;
  s.points.push_back(weighted_sum(tri, {1, 1, 1}));
  std::ostringstream out;
  write_csv(out, s, tri.program);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("method,theta_lo,theta_mid,theta_hi,z0,z1", 0) == 0);
  std::string row;
  CHECK(static_cast<bool>(std::getline(lines, row)));
  CHECK_FALSE(static_cast<bool>(std::getline(lines, row)));
}
