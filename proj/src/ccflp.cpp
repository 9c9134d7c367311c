#include "fzmm/ccflp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "fzmm/error.hpp"

namespace fzmm {

using milp::Entry;
using milp::RowSense;

namespace {

double pick(const Tfn& v, Selector s) {
  switch (s) {
    case Component::kLo: return v.lo();
    case Component::kMid: return v.mid();
    case Component::kHi: return v.hi();
  }
  return v.mid();
}

std::string site(std::size_t k) { return std::to_string(k + 1); }

std::string label(const Tfn& v) {
  char buf[96];
  if (v.is_degenerate()) {
    std::snprintf(buf, sizeof buf, "%.2f", v.mid());
  } else {
    std::snprintf(buf, sizeof buf, "(%.2f,%.2f,%.2f)", v.lo(), v.mid(), v.hi());
  }
  return buf;
}

}  // namespace

std::vector<std::string> CcflpInstance::problems() const {
  std::vector<std::string> out;
  if (n == 0 || m == 0) out.push_back("n and m must be positive");
  if (demand.size() != n) out.push_back("d has " + std::to_string(demand.size()) + " entries, expected n");
  if (capacity.size() != m) out.push_back("u has " + std::to_string(capacity.size()) + " entries, expected m");
  if (setup_cost.size() != m) out.push_back("f has " + std::to_string(setup_cost.size()) + " entries, expected m");
  if (cost.size() != n) out.push_back("c has " + std::to_string(cost.size()) + " rows, expected n");
  for (std::size_t i = 0; i < cost.size(); ++i) {
    if (cost[i].size() != m) out.push_back("c[" + std::to_string(i) + "] has " + std::to_string(cost[i].size()) + " entries, expected m");
  }
  const auto check = [&](const std::vector<Tfn>& values, const std::string& field) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (!values[k].is_nonnegative()) {
        out.push_back(field + "[" + std::to_string(k) + "] = " + to_string(values[k]) + " is negative");
      }
    }
  };
  check(demand, "d");
  check(capacity, "u");
  check(setup_cost, "f");
  for (std::size_t i = 0; i < cost.size(); ++i) check(cost[i], "c[" + std::to_string(i) + "]");
  return out;
}

void CcflpInstance::validate() const {
  const auto issues = problems();
  if (issues.empty()) return;
  std::string what = "invalid instance:";
  for (const auto& p : issues) what += "\n  " + p;
  throw Error(ErrorCode::kParseError, what);
}

CrispCcflpModel build_crisp_model(const CcflpInstance& instance, Selector selector) {
  instance.validate();
  CrispCcflpModel out;
  auto& lp = out.program;
  const std::size_t n = instance.n;
  const std::size_t m = instance.m;
  out.flow.assign(n, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out.flow[i][j] = lp.add_variable(0.0, milp::kInf, 0.0, "x_" + site(i) + "_" + site(j));
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    out.open.push_back(lp.add_variable(0.0, 1.0, 0.0, "y_" + site(j)));
  }
  out.binaries = out.open;
  out.theta = lp.add_variable(-milp::kInf, milp::kInf, 1.0, "theta");

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Entry> row;
    for (std::size_t j = 0; j < m; ++j) {
      row.push_back({out.flow[i][j], pick(instance.cost[i][j], selector)});
      row.push_back({out.open[j], pick(instance.setup_cost[j], selector)});
    }
    row.push_back({out.theta, -1.0});
    lp.add_row(std::move(row), RowSense::kLessEqual, 0.0, "cost_" + site(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Entry> row;
    for (std::size_t j = 0; j < m; ++j) row.push_back({out.flow[i][j], 1.0});
    lp.add_row(std::move(row), RowSense::kEqual, pick(instance.demand[i], selector), "demand_" + site(i));
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Entry> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back({out.flow[i][j], 1.0});
    row.push_back({out.open[j], -pick(instance.capacity[j], selector)});
    lp.add_row(std::move(row), RowSense::kLessEqual, 0.0, "capacity_" + site(j));
  }
  return out;
}

std::string to_string(CapacityVariant variant) {
  return variant == CapacityVariant::kDerived ? "derived" : "literal";
}

CapacityVariant parse_variant(const std::string& text) {
  if (text == "derived") return CapacityVariant::kDerived;
  if (text == "literal") return CapacityVariant::kLiteral;
  throw Error(ErrorCode::kUnknownVariant, "'" + text + "' (expected derived or literal)");
}

FuzzyCcflpModel build_fuzzy_model(const CcflpInstance& instance, CapacityVariant variant) {
  instance.validate();
  FuzzyCcflpModel out;
  out.variant = variant;
  auto& model = out.model;
  const std::size_t n = instance.n;
  const std::size_t m = instance.m;
  out.flow.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out.flow[i].push_back(model.add_variable("x_" + site(i) + "_" + site(j), VariableKind::kFuzzyNonnegative));
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    out.open.push_back(model.add_variable("y_" + site(j), VariableKind::kCrispBinary));
  }

  std::vector<FuzzyLinearExpression> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) rows[i].add_term(instance.cost[i][j], out.flow[i][j]);
  }
  FuzzyLinearExpression setup;
  for (std::size_t j = 0; j < m; ++j) setup.add_term(instance.setup_cost[j], out.open[j]);
  model.set_minimax_rows(std::move(rows), setup);

  for (std::size_t i = 0; i < n; ++i) {
    FuzzyLinearExpression served;
    for (std::size_t j = 0; j < m; ++j) served.add_term(Tfn::crisp(1.0), out.flow[i][j]);
    model.add_constraint(std::move(served), FuzzyRelation::kEqual, instance.demand[i], "demand_" + site(i));
  }
  for (std::size_t j = 0; j < m; ++j) {
    FuzzyLinearExpression load;
    for (std::size_t i = 0; i < n; ++i) {
      const Tfn coefficient = variant == CapacityVariant::kDerived ? Tfn::crisp(1.0) : instance.demand[i];
      load.add_term(coefficient, out.flow[i][j]);
    }
    FuzzyLinearExpression limit;
    limit.add_term(instance.capacity[j], out.open[j]);
    model.add_constraint(std::move(load), FuzzyRelation::kLessOrApprox, std::move(limit),
                         "capacity_" + site(j));
  }
  return out;
}

AssignmentNetwork extract_network(const FuzzyCcflpModel& built, const FuzzyAssignment& assignment,
                                  const Tfn& theta, double tol, double flow_tol) {
  const Evaluation e = evaluate(built.model, assignment, tol);
  if (!e.feasible) {
    std::string what = "solution violates the model:";
    for (const auto& v : e.violations) what += "\n  " + v;
    throw Error(ErrorCode::kInfeasiblePoint, what);
  }
  AssignmentNetwork net;
  net.theta = theta;
  for (std::size_t j = 0; j < built.open.size(); ++j) {
    if (assignment[built.open[j].id].mid() == 1.0) net.open_facilities.push_back(j);
  }
  for (std::size_t i = 0; i < built.flow.size(); ++i) {
    for (std::size_t j = 0; j < built.flow[i].size(); ++j) {
      const Tfn& x = assignment[built.flow[i][j].id];
      if (x.hi() > flow_tol) net.flows.emplace(std::pair{i, j}, x);
    }
  }
  return net;
}

AssignmentNetwork extract_crisp_network(const CrispCcflpModel& built, std::span<const double> point,
                                        double flow_tol) {
  AssignmentNetwork net;
  net.theta = Tfn::crisp(point[built.theta]);
  for (std::size_t j = 0; j < built.open.size(); ++j) {
    if (point[built.open[j]] > 0.5) net.open_facilities.push_back(j);
  }
  for (std::size_t i = 0; i < built.flow.size(); ++i) {
    for (std::size_t j = 0; j < built.flow[i].size(); ++j) {
      const double x = point[built.flow[i][j]];
      if (x > flow_tol) net.flows.emplace(std::pair{i, j}, Tfn::crisp(x));
    }
  }
  return net;
}

void write_dot(std::ostream& out, const CcflpInstance& instance, const AssignmentNetwork& network,
               const std::string& title) {
  const bool shared_sites = instance.n == instance.m;
  const auto is_open = [&](std::size_t j) {
    return std::find(network.open_facilities.begin(), network.open_facilities.end(), j) !=
           network.open_facilities.end();
  };
  const auto facility_node = [&](std::size_t j) { return (shared_sites ? "s" : "f") + site(j); };
  const auto customer_node = [&](std::size_t i) { return (shared_sites ? "s" : "c") + site(i); };

  out << "graph \"" << title << "\" {\n";
  out << "  label=\"theta = " << label(network.theta) << "\";\n";
  out << "  node [shape=circle];\n";
  for (std::size_t j = 0; j < instance.m; ++j) {
    out << "  " << facility_node(j) << " [label=\"" << site(j) << "\"";
    if (is_open(j)) out << ", style=filled, fillcolor=black, fontcolor=white";
    out << "];\n";
  }
  if (!shared_sites) {
    for (std::size_t i = 0; i < instance.n; ++i) {
      out << "  " << customer_node(i) << " [label=\"" << site(i) << "\", shape=box];\n";
    }
  }
  for (const auto& [edge, flow] : network.flows) {
    const auto [i, j] = edge;
    if (shared_sites && i == j) continue;
    out << "  " << customer_node(i) << " -- " << facility_node(j) << " [label=\"" << label(flow)
        << "\"];\n";
  }
  out << "}\n";
}

CcflpInstance random_instance(std::size_t n, std::size_t m, std::uint64_t seed, bool crisp) {
  std::mt19937_64 rng(seed);
  const auto uniform = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  const auto fuzzy = [&](double mid, double spread) {
    if (crisp) return Tfn::crisp(mid);
    const double lo = std::max(0.0, mid - uniform(0.0, spread * mid));
    return Tfn(lo, mid, mid + uniform(0.0, spread * mid));
  };

  CcflpInstance inst;
  inst.n = n;
  inst.m = m;
  double demand_hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    inst.demand.push_back(fuzzy(uniform(5.0, 40.0), 0.3));
    demand_hi += inst.demand.back().hi();
  }
  // Each facility alone covers a share of the worst-case total demand, so the
  // all-open configuration is feasible for every component.
  const double floor = 1.2 * demand_hi / static_cast<double>(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double mid = floor * uniform(1.5, 2.5);
    Tfn u = fuzzy(mid, 0.3);
    if (u.lo() < floor) u = Tfn(floor, std::max(floor, u.mid()), std::max(floor, u.hi()));
    inst.capacity.push_back(u);
    inst.setup_cost.push_back(fuzzy(uniform(100.0, 600.0), 0.4));
  }
  inst.cost.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      inst.cost[i].push_back(n == m && i == j ? Tfn() : fuzzy(uniform(10.0, 100.0), 0.3));
    }
  }
  return inst;
}

}  // namespace fzmm
