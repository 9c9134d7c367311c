#include <doctest.h>

#include <sstream>

#include "audit.hpp"
#include "fzmm/error.hpp"
#include "fzmm/json_io.hpp"

using namespace fzmm;

TEST_CASE("bundled example is valid") {
  const CcflpInstance inst = load_instance(std::string(FZMM_DATA_DIR) + "/example1.json");
  CHECK(inst.n == 6);
  CHECK(inst.m == 6);
  CHECK(inst.problems().empty());
}

TEST_CASE("tfn encoding") {
  CHECK(to_json(Tfn(1, 2, 3)) == nlohmann::json::array({1, 2, 3}));
  CHECK(to_json(Tfn::crisp(4)) == nlohmann::json(4));
  CHECK(tfn_from_json(nlohmann::json(2.5), "x") == Tfn::crisp(2.5));
  CHECK_THROWS_AS(tfn_from_json(nlohmann::json::array({3, 2, 1}), "x"), Error);
  CHECK_THROWS_AS(tfn_from_json(nlohmann::json("a"), "x"), Error);
}

TEST_CASE("inspection collects problems") {
  std::istringstream in(R"({"n": 2, "m": 1, "d": [[3, 2, 1], 4], "u": [10], "f": [-1], "c": [[1], [2]]})");
  const InstanceInspection report = inspect_instance(in);
  CHECK(report.n == 2);
  CHECK_FALSE(report.instance);
  CHECK(report.problems.size() >= 2);

  std::istringstream truncated(R"({"n": 2, "m": )");
  CHECK_THROWS_AS(inspect_instance(truncated), Error);
  std::istringstream missing(R"({"n": 1, "m": 1})");
  CHECK_THROWS_AS(read_instance(missing), Error);
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.json"), Error);
}

TEST_CASE("instance round trip") {
  const CcflpInstance inst = random_instance(3, 2, 5, false);
  std::stringstream io;
  write_instance(io, inst);
  const CcflpInstance back = read_instance(io);
  CHECK(back.demand == inst.demand);
  CHECK(back.capacity == inst.capacity);
  CHECK(back.setup_cost == inst.setup_cost);
  CHECK(back.cost == inst.cost);
}

TEST_CASE("model round trip") {
  const FuzzyMinimaxModel model = audit::random_crisp_minimax(3, 2, 2);
  const nlohmann::json doc = model_to_json(model);
  const FuzzyMinimaxModel back = model_from_json(doc);
  CHECK(model_to_json(back) == doc);
  CHECK(back.variables().size() == model.variables().size());
  CHECK(back.constraints().size() == model.constraints().size());
}
