#include "audit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "fzmm/error.hpp"
#include "fzmm/json_io.hpp"
#include "fzmm/milp.hpp"
#include "fzmm/pareto.hpp"
#include "fzmm/reformulate.hpp"

namespace fzmm::audit {
namespace {

using milp::RowSense;
using milp::SolveStatus;

std::string fmt(const char* format, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

std::string fixed2(double v) { return fmt("%.2f", v); }

std::string triple2(const std::array<double, 3>& t) {
  return "(" + fixed2(t[0]) + ", " + fixed2(t[1]) + ", " + fixed2(t[2]) + ")";
}

std::string triple2(const Tfn& t) { return triple2(std::array{t.lo(), t.mid(), t.hi()}); }

std::string sites(const std::vector<std::size_t>& zero_based) {
  std::string s = "{";
  for (std::size_t k = 0; k < zero_based.size(); ++k) {
    s += (k ? ", " : "") + std::to_string(zero_based[k] + 1);
  }
  return s + "}";
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct IntRng {
  explicit IntRng(std::uint64_t seed) : engine(seed) {}
  int operator()(int a, int b) { return std::uniform_int_distribution<int>(a, b)(engine); }
  Tfn tfn(int lo, int hi) {
    std::array<int, 3> v{(*this)(lo, hi), (*this)(lo, hi), (*this)(lo, hi)};
    std::sort(v.begin(), v.end());
    return Tfn(v[0], v[1], v[2]);
  }
  std::mt19937_64 engine;
};

// Counts failures per family and keeps the first example of each.
struct Tally {
  void expect(bool ok, const std::string& family, const std::string& example) {
    ++cases[family];
    if (ok) return;
    if (failures[family]++ == 0) first[family] = example;
  }
  std::size_t total_failures() const {
    std::size_t n = 0;
    for (const auto& [k, v] : failures) n += v;
    return n;
  }
  void report(CheckResult& r) const {
    for (const auto& [family, n] : cases) {
      const auto it = failures.find(family);
      const std::size_t bad = it == failures.end() ? 0 : it->second;
      std::string line = family + ": " + std::to_string(n) + " cases, " + std::to_string(bad) + " failures";
      if (bad) line += " (first: " + first.at(family) + ")";
      r.details.push_back(line);
    }
  }
  std::map<std::string, std::size_t> cases;
  std::map<std::string, std::size_t> failures;
  std::map<std::string, std::string> first;
};

std::string pair_text(const Tfn& a, const Tfn& b) { return to_string(a) + " and " + to_string(b); }

bool same(const Interval& a, const Interval& b) { return a.lower == b.lower && a.upper == b.upper; }

}  // namespace

std::optional<double> crisp_minimax_by_enumeration(const FuzzyMinimaxModel& model) {
  std::vector<std::size_t> binaries;
  std::vector<std::size_t> column(model.variables().size(), 0);
  std::size_t continuous = 0;
  for (const VariableRef& v : model.variables()) {
    if (v.kind == VariableKind::kCrispBinary) {
      binaries.push_back(v.id);
    } else {
      column[v.id] = continuous++;
    }
  }
  const auto crisp_value = [](const Tfn& t) {
    if (!t.is_degenerate()) throw Error(ErrorCode::kKindMismatch, "enumeration needs crisp data");
    return t.mid();
  };

  std::optional<double> best;
  std::vector<double> y(model.variables().size(), 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << binaries.size()); ++mask) {
    for (std::size_t b = 0; b < binaries.size(); ++b) y[binaries[b]] = (mask >> b) & 1 ? 1.0 : 0.0;
    milp::LinearProgram lp;
    for (std::size_t k = 0; k < continuous; ++k) lp.add_variable(0.0, milp::kInf);
    const std::size_t t = lp.add_variable(-milp::kInf, milp::kInf, 1.0);
    // Moves binary terms and constants to the right-hand side.
    const auto linear = [&](const FuzzyLinearExpression& e, double sign, std::vector<milp::Entry>& entries,
                            double& rhs) {
      rhs -= sign * crisp_value(e.constant());
      for (const Term& term : e.terms()) {
        const double c = sign * crisp_value(term.coefficient);
        if (model.variable(term.variable).kind == VariableKind::kCrispBinary) {
          rhs -= c * y[term.variable];
        } else {
          entries.push_back({column[term.variable], c});
        }
      }
    };
    for (const auto& row : model.minimax_rows()) {
      std::vector<milp::Entry> entries{{t, -1.0}};
      double rhs = 0.0;
      linear(row, 1.0, entries, rhs);
      lp.add_row(std::move(entries), RowSense::kLessEqual, rhs);
    }
    for (const FuzzyConstraint& c : model.constraints()) {
      std::vector<milp::Entry> entries;
      double rhs = 0.0;
      linear(c.lhs, 1.0, entries, rhs);
      linear(c.rhs, -1.0, entries, rhs);
      lp.add_row(std::move(entries),
                 c.relation == FuzzyRelation::kEqual ? RowSense::kEqual : RowSense::kLessEqual, rhs);
    }
    const milp::MilpSolution sol = milp::solve_lp(lp);
    if (sol.status == SolveStatus::kUnbounded) throw Error(ErrorCode::kUnbounded, "enumeration subproblem");
    if (sol.status == SolveStatus::kOptimal && (!best || sol.objective < *best)) best = sol.objective;
  }
  return best;
}

FuzzyMinimaxModel random_crisp_minimax(std::uint64_t seed, std::size_t binaries, std::size_t continuous) {
  IntRng rng(seed);
  FuzzyMinimaxModel model;
  std::vector<VariableRef> y;
  std::vector<VariableRef> x;
  for (std::size_t b = 0; b < binaries; ++b) {
    y.push_back(model.add_variable("y" + std::to_string(b), VariableKind::kCrispBinary));
  }
  for (std::size_t k = 0; k < continuous; ++k) {
    x.push_back(model.add_variable("x" + std::to_string(k), VariableKind::kFuzzyNonnegative));
  }
  const auto c = [](double v) { return Tfn::crisp(v); };

  std::vector<FuzzyLinearExpression> rows(static_cast<std::size_t>(rng(1, 3)));
  for (auto& row : rows) {
    for (const auto& v : y) row.add_term(c(rng(-5, 5)), v);
    for (const auto& v : x) row.add_term(c(rng(-5, 5)), v);
    row.add_constant(c(rng(-3, 3)));
  }
  model.set_minimax_rows(std::move(rows));

  FuzzyLinearExpression total;
  for (const auto& v : x) total.add_term(c(1), v);
  model.add_constraint(std::move(total), FuzzyRelation::kLessOrApprox, c(10), "total");
  for (std::size_t k = 0; k < continuous; ++k) {
    FuzzyLinearExpression link;
    link.add_term(c(1), x[k]).add_term(c(-6), y[k % binaries]);
    model.add_constraint(std::move(link), FuzzyRelation::kLessOrApprox, c(0), "link" + std::to_string(k));
  }
  FuzzyLinearExpression cover;
  for (const auto& v : y) cover.add_term(c(-1), v);
  model.add_constraint(std::move(cover), FuzzyRelation::kLessOrApprox, c(-1), "cover");

  FuzzyLinearExpression budget;
  for (const auto& v : x) budget.add_term(c(rng(0, 4)), v);
  FuzzyLinearExpression limit(c(rng(4, 12)));
  limit.add_term(c(3), y[0]);
  model.add_constraint(std::move(budget), FuzzyRelation::kLessOrApprox, std::move(limit), "budget");

  // An open first binary forces some activity on x0.
  FuzzyLinearExpression floor;
  floor.add_term(c(-1), x[0]).add_term(c(1), y[0]);
  model.add_constraint(std::move(floor), FuzzyRelation::kLessOrApprox, c(0), "floor");
  return model;
}

FuzzyMinimaxModel two_point_frontier_model() {
  FuzzyMinimaxModel model;
  const VariableRef z0 = model.add_variable("z0", VariableKind::kCrispBinary);
  const VariableRef z1 = model.add_variable("z1", VariableKind::kCrispBinary);
  FuzzyLinearExpression r0;
  r0.add_term(Tfn(1, 2, 3), z0);
  FuzzyLinearExpression r1;
  r1.add_term(Tfn(0, 3, 3), z1);
  model.set_minimax_rows({r0, r1});
  FuzzyLinearExpression pick;
  pick.add_term(Tfn::crisp(1), z0).add_term(Tfn::crisp(1), z1);
  model.add_constraint(std::move(pick), FuzzyRelation::kEqual, Tfn::crisp(1), "pick_one");
  return model;
}

std::vector<ReportedTriple> reported_fuzzy_triples() {
  return {
      {"6(a)", Tfn(1399.70, 2629.27, 3463.01)},
      {"6(b)", Tfn(1399.70, 2629.27, 3463.01)},
      {"6(c)", Tfn(804.08, 2734.90, 3580.96)},
      {"6(d)", Tfn(1403.01, 2575.95, 3542.52)},
  };
}

CheckResult check_algebra(std::uint64_t seed) {
  Timer timer;
  CheckResult r{1, "fuzzy algebra: case splits, alpha-level consistency, order characterization"};
  IntRng rng(seed);
  Tally tally;
  const double alphas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::array<std::size_t, 3> product_cases{};

  for (int n = 0; n < 10000; ++n) {
    const Tfn a = rng.tfn(-6, 6);
    const Tfn b = rng.tfn(-6, 6);
    const Tfn nonneg = rng.tfn(0, 6);
    const double lambda = rng(-8, 8) / 4.0;

    const Tfn sum = add(a, b);
    bool ok = sum.lo() <= sum.mid() && sum.mid() <= sum.hi();
    for (double al : alphas) {
      const Interval la = alpha_level(a, al);
      const Interval lb = alpha_level(b, al);
      ok = ok && same(alpha_level(sum, al), {la.lower + lb.lower, la.upper + lb.upper});
    }
    tally.expect(ok, "sum", pair_text(a, b));

    const Tfn scaled = scale(lambda, a);
    ok = scaled.lo() <= scaled.mid() && scaled.mid() <= scaled.hi();
    for (double al : alphas) {
      const Interval la = alpha_level(a, al);
      const double p = lambda * la.lower;
      const double q = lambda * la.upper;
      ok = ok && same(alpha_level(scaled, al), {std::min(p, q), std::max(p, q)});
    }
    tally.expect(ok, "scale", fmt("%g", lambda) + " * " + to_string(a));

    // The product's support is the interval product of the supports and its
    // core is the product of the cores.
    const Tfn product = mul(a, nonneg);
    product_cases[a.lo() >= 0 ? 0 : (a.hi() >= 0 ? 1 : 2)]++;
    const double ends[] = {a.lo() * nonneg.lo(), a.lo() * nonneg.hi(), a.hi() * nonneg.lo(),
                           a.hi() * nonneg.hi()};
    const Interval support = alpha_level(product, 0.0);
    ok = product.lo() <= product.mid() && product.mid() <= product.hi() &&
         support.lower == *std::min_element(std::begin(ends), std::end(ends)) &&
         support.upper == *std::max_element(std::begin(ends), std::end(ends)) &&
         same(alpha_level(product, 1.0), {a.mid() * nonneg.mid(), a.mid() * nonneg.mid()});
    tally.expect(ok, "product", pair_text(a, nonneg));

    if (b.lo() < 0) {
      bool threw = false;
      try {
        (void)mul(a, b);
      } catch (const Error& e) {
        threw = e.code() == ErrorCode::kRequiresNonnegativeOperand;
      }
      tally.expect(threw, "product rejects negative operand", pair_text(a, b));
    }

    bool endpoints_le = true;
    bool endpoints_lt = true;
    for (double al : alphas) {
      const Interval la = alpha_level(a, al);
      const Interval lb = alpha_level(b, al);
      endpoints_le = endpoints_le && la.lower <= lb.lower && la.upper <= lb.upper;
      endpoints_lt = endpoints_lt && la.lower < lb.lower && la.upper < lb.upper;
    }
    const OrderRelation rel = compare(a, b);
    tally.expect(less_or_approx(a, b) == endpoints_le &&
                     implies(rel, OrderRelation::kLessOrApprox) == endpoints_le &&
                     (rel == OrderRelation::kStrictlyLess) == endpoints_lt &&
                     (rel == OrderRelation::kEqual) == (a == b),
                 "order vs alpha levels", pair_text(a, b));

    const int x = rng(-20, 20);
    const int yv = rng(0, 20);
    const Tfn cx = Tfn::crisp(x);
    const Tfn cy = Tfn::crisp(yv);
    const std::array<Tfn, 2> pair{cx, cy};
    tally.expect(add(cx, cy) == Tfn::crisp(x + yv) && scale(lambda, cx) == Tfn::crisp(lambda * x) &&
                     mul(cx, cy) == Tfn::crisp(static_cast<double>(x) * yv) &&
                     theta_mub(pair) == Tfn::crisp(std::max(x, yv)),
                 "degenerate reduction", pair_text(cx, cy));
  }
  r.details.push_back("product sign cases (lo >= 0 / mixed / hi < 0): " + std::to_string(product_cases[0]) +
                      " / " + std::to_string(product_cases[1]) + " / " + std::to_string(product_cases[2]));
  tally.report(r);
  r.seconds = timer.seconds();
  r.passed = tally.total_failures() == 0 && r.seconds < 5.0 &&
             std::all_of(product_cases.begin(), product_cases.end(), [](std::size_t n) { return n > 0; });
  return r;
}

CheckResult check_theta(std::uint64_t seed) {
  Timer timer;
  CheckResult r{2, "minimal upper bound: bound, minimality, crisp reduction"};
  IntRng rng(seed);
  Tally tally;
  for (int n = 0; n < 1000; ++n) {
    std::vector<Tfn> set(static_cast<std::size_t>(rng(1, 8)));
    for (auto& t : set) t = rng.tfn(-10, 10);
    const Tfn bound = theta_mub(set);
    tally.expect(is_upper_bound(bound, set), "is an upper bound", to_string(bound));

    // Every component is attained by some member, so lowering any of them
    // uncovers that member.
    Tfn lowered = bound;
    for (int attempt = 0; attempt < 100; ++attempt) {
      const double lo = bound.lo() - rng(0, 3);
      const double mid = bound.mid() - rng(0, 3);
      const double hi = bound.hi() - rng(0, 3);
      if (lo <= mid && mid <= hi && !(lo == bound.lo() && mid == bound.mid() && hi == bound.hi())) {
        lowered = Tfn(lo, mid, hi);
        break;
      }
    }
    if (!(lowered == bound)) {
      const OrderRelation rel = compare(lowered, bound);
      tally.expect(implies(rel, OrderRelation::kDominates) && !is_upper_bound(lowered, set),
                   "dominated candidates are not bounds", to_string(lowered) + " below " + to_string(bound));
    }

    std::vector<Tfn> crisp(set.size());
    double top = -1e300;
    for (auto& t : crisp) {
      const int v = rng(-50, 50);
      t = Tfn::crisp(v);
      top = std::max(top, static_cast<double>(v));
    }
    tally.expect(theta_mub(crisp) == Tfn::crisp(top), "crisp sets reduce to max", fmt("%g", top));
  }
  tally.report(r);
  r.seconds = timer.seconds();
  r.passed = tally.total_failures() == 0;
  return r;
}

CheckResult check_crisp_oracle(std::uint64_t seed) {
  Timer timer;
  CheckResult r{3, "crisp oracle equivalence on 200 random minimax MILPs"};
  std::mt19937_64 rng(seed);
  std::size_t mismatches = 0;
  std::size_t infeasible = 0;
  double worst = 0.0;
  for (int n = 0; n < 200; ++n) {
    const std::size_t binaries = 1 + rng() % 8;
    const std::size_t continuous = 1 + rng() % 10;
    const FuzzyMinimaxModel model = random_crisp_minimax(rng(), binaries, continuous);
    const std::optional<double> oracle = crisp_minimax_by_enumeration(model);
    const TriObjectiveMilp tri = reformulate(model);
    const milp::MilpSolution sol = milp::solve_milp(scalarize(tri, {0.0, 1.0, 0.0}), tri.binaries);
    if (!oracle) {
      ++infeasible;
      if (sol.status != SolveStatus::kInfeasible) ++mismatches;
      continue;
    }
    const double gap = sol.status == SolveStatus::kOptimal ? std::abs(sol.objective - *oracle) : milp::kInf;
    worst = std::max(worst, gap);
    if (gap > 1e-6) {
      if (mismatches == 0) {
        r.details.push_back("first mismatch at instance " + std::to_string(n) + ": oracle " +
                            fmt("%.9g", *oracle) + ", pipeline " + fmt("%.9g", sol.objective));
      }
      ++mismatches;
    }
  }
  r.seconds = timer.seconds();
  r.details.push_back(std::to_string(200 - infeasible) + " feasible, " + std::to_string(infeasible) +
                      " infeasible, " + std::to_string(mismatches) + " mismatches, largest gap " +
                      fmt("%.3g", worst));
  r.passed = mismatches == 0 && r.seconds < 60.0;
  return r;
}

CheckResult check_example_crisp(const CcflpInstance& instance) {
  Timer timer;
  CheckResult r{4, "example crisp reproduction at mid values"};
  const CrispCcflpModel cm = build_crisp_model(instance, Component::kMid);
  const milp::MilpSolution sol = milp::solve_milp(cm.program, cm.binaries);
  if (sol.status != SolveStatus::kOptimal) {
    r.details.push_back("solver status " + milp::to_string(sol.status));
    r.seconds = timer.seconds();
    return r;
  }
  const AssignmentNetwork net = extract_crisp_network(cm, sol.point);

  // Brute force over every open set with the binaries fixed.
  double best = milp::kInf;
  std::vector<std::size_t> best_set;
  double expected_set_value = milp::kInf;
  const std::vector<std::size_t> expected{2, 4, 5};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << instance.m); ++mask) {
    milp::LinearProgram lp = cm.program;
    std::vector<std::size_t> open;
    for (std::size_t j = 0; j < instance.m; ++j) {
      const double v = (mask >> j) & 1 ? 1.0 : 0.0;
      lp.set_bounds(cm.open[j], v, v);
      if (v == 1.0) open.push_back(j);
    }
    const milp::MilpSolution s = milp::solve_lp(lp);
    if (s.status != SolveStatus::kOptimal) continue;
    if (s.objective < best) {
      best = s.objective;
      best_set = open;
    }
    if (open == expected) expected_set_value = s.objective;
  }

  const bool open_match = net.open_facilities == expected;
  const bool objective_match = std::abs(sol.objective - best) <= 1e-6;
  r.details.push_back("open set " + sites(net.open_facilities) + ", expected " + sites(expected) +
                      (open_match ? " (match)" : " (MISMATCH)"));
  r.details.push_back("objective " + fmt("%.6f", sol.objective) + ", brute force " + fmt("%.6f", best) +
                      " at " + sites(best_set) + (objective_match ? " (match)" : " (MISMATCH)"));
  r.details.push_back("best value with " + sites(expected) + " open: " + fmt("%.6f", expected_set_value));

  const struct {
    std::size_t i, j;
    double value;
  } figure_flows[] = {{0, 5, 23}, {1, 2, 28.18}, {1, 5, 4.81}, {3, 2, 0.06}, {3, 4, 14.15}, {3, 5, 5.68}};
  std::size_t flow_hits = 0;
  for (const auto& f : figure_flows) {
    const auto it = net.flows.find({f.i, f.j});
    const double got = it == net.flows.end() ? 0.0 : it->second.mid();
    const bool hit = std::abs(got - f.value) <= 1e-2;
    flow_hits += hit;
    r.details.push_back("  flow " + std::to_string(f.i + 1) + "->" + std::to_string(f.j + 1) + ": figure " +
                        fixed2(f.value) + ", solved " + fixed2(got) + (hit ? "" : " (differs)"));
  }
  r.details.push_back("figure flows reproduced within 0.01: " + std::to_string(flow_hits) +
                      " of 6 (informational)");
  r.seconds = timer.seconds();
  r.passed = open_match && objective_match && r.seconds < 10.0;
  return r;
}

CheckResult check_reported_triples() {
  Timer timer;
  CheckResult r{5, "figure triples pairwise incomparable, (a) equal to (b)"};
  const auto triples = reported_fuzzy_triples();
  bool ok = compare(triples[0].theta, triples[1].theta) == OrderRelation::kEqual;
  r.details.push_back(triples[0].label + " vs " + triples[1].label + ": " +
                      to_string(compare(triples[0].theta, triples[1].theta)));
  const std::size_t distinct[] = {0, 2, 3};
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t q = p + 1; q < 3; ++q) {
      const auto& a = triples[distinct[p]];
      const auto& b = triples[distinct[q]];
      const OrderRelation ab = compare(a.theta, b.theta);
      const OrderRelation ba = compare(b.theta, a.theta);
      ok = ok && ab == OrderRelation::kIncomparable && ba == OrderRelation::kIncomparable;
      r.details.push_back(a.label + " vs " + b.label + ": " + to_string(ab));
    }
  }
  r.seconds = timer.seconds();
  r.passed = ok;
  return r;
}

CheckResult check_triple_feasibility(const CcflpInstance& instance) {
  Timer timer;
  CheckResult r{6, "figure triples feasible with theta fixed (+/- 0.01)"};
  const double slack = 1e-2;
  const auto triples = reported_fuzzy_triples();
  std::vector<std::pair<CapacityVariant, TriObjectiveMilp>> programs;
  for (CapacityVariant v : {CapacityVariant::kDerived, CapacityVariant::kLiteral}) {
    programs.emplace_back(v, reformulate(build_fuzzy_model(instance, v).model));
  }
  bool audited = true;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    if (t == 1) continue;  // same triple as (a)
    const std::array<double, 3> target{triples[t].theta.lo(), triples[t].theta.mid(), triples[t].theta.hi()};
    std::vector<std::string> feasible_under;
    std::vector<std::string> gaps;
    for (const auto& [variant, tri] : programs) {
      milp::LinearProgram lp = tri.program;
      for (std::size_t k = 0; k < 3; ++k) lp.set_bounds(tri.theta[k], target[k] - slack, target[k] + slack);
      const milp::MilpSolution sol = milp::solve_milp(lp, tri.binaries);
      if (sol.status == SolveStatus::kOptimal) {
        try {
          (void)lift_solution(tri, sol.point);
          feasible_under.push_back(to_string(variant));
        } catch (const Error& e) {
          gaps.push_back(to_string(variant) + ": solver point failed re-check (" + e.what() + ")");
          audited = false;
        }
        continue;
      }
      // Smallest widening s of the theta window that admits a solution.
      milp::LinearProgram widened = tri.program;
      widened.clear_costs();
      const std::size_t s = widened.add_variable(0.0, milp::kInf, 1.0, "widen");
      for (std::size_t k = 0; k < 3; ++k) {
        widened.add_row({{tri.theta[k], 1.0}, {s, -1.0}}, RowSense::kLessEqual, target[k] + slack);
        widened.add_row({{tri.theta[k], 1.0}, {s, 1.0}}, RowSense::kGreaterEqual, target[k] - slack);
      }
      const milp::MilpSolution w = milp::solve_milp(widened, tri.binaries);
      if (w.status == SolveStatus::kOptimal) {
        gaps.push_back(to_string(variant) + ": infeasible, minimal infeasibility " + fmt("%.4f", w.objective));
      } else {
        gaps.push_back(to_string(variant) + ": program infeasible for every theta");
      }
    }
    std::string line = triples[t].label + " " + triple2(triples[t].theta) + ": ";
    if (feasible_under.empty()) {
      line += "no variant admits it";
    } else {
      line += "feasible under";
      for (const auto& v : feasible_under) line += " " + v;
    }
    r.details.push_back(line);
    for (const auto& g : gaps) r.details.push_back("  " + g);
  }
  r.seconds = timer.seconds();
  r.passed = audited;
  return r;
}

CheckResult check_pareto_machinery() {
  Timer timer;
  CheckResult r{7, "pareto machinery on a two-point frontier"};
  const FuzzyMinimaxModel model = two_point_frontier_model();

  // Oracle: evaluate every binary vector.
  std::vector<ParetoPoint> enumerated;
  for (int mask = 0; mask < 4; ++mask) {
    const FuzzyAssignment assignment{Tfn::crisp(mask & 1), Tfn::crisp((mask >> 1) & 1)};
    const Evaluation e = evaluate(model, assignment, 1e-9);
    if (!e.feasible) continue;
    enumerated.push_back({{e.objective.lo(), e.objective.mid(), e.objective.hi()}, {}, "enumerated"});
  }
  const ParetoSet oracle = filter_nondominated(enumerated, 1e-9);
  const std::set<std::array<double, 3>> expected{{1, 2, 3}, {0, 3, 3}};
  std::set<std::array<double, 3>> oracle_set;
  for (const auto& p : oracle.points) oracle_set.insert(p.theta);
  bool ok = oracle_set == expected;
  r.details.push_back("enumerated frontier has " + std::to_string(oracle.points.size()) + " points" +
                      (ok ? "" : " (unexpected)"));

  const TriObjectiveMilp tri = reformulate(model);
  const auto matches = [&](const ParetoSet& found) {
    if (found.points.size() != oracle.points.size()) return false;
    for (const auto& p : found.points) {
      const bool hit = std::any_of(oracle.points.begin(), oracle.points.end(), [&](const ParetoPoint& q) {
        for (std::size_t k = 0; k < 3; ++k) {
          if (std::abs(p.theta[k] - q.theta[k]) > 1e-6) return false;
        }
        return true;
      });
      if (!hit) return false;
    }
    return true;
  };
  for (std::size_t n : {2, 3}) {
    const ParetoSet found = epsilon_constraint_enumerate(tri, {n, n});
    const bool hit = matches(found);
    ok = ok && hit;
    std::string line = "epsilon grid " + std::to_string(n) + "x" + std::to_string(n) + ":";
    for (const auto& p : found.points) line += " " + triple2(p.theta);
    r.details.push_back(line + (hit ? "" : " (MISMATCH)"));
  }

  std::vector<ParetoPoint> scalarized;
  for (const auto& w : std::vector<std::array<double, 3>>{{1, 1, 1}, {1, 2, 3}, {5, 1, 1}, {1, 5, 1}, {1, 1, 5}}) {
    scalarized.push_back(weighted_sum(tri, w));
  }
  using C = Component;
  for (const auto& order : std::vector<std::array<C, 3>>{{C::kLo, C::kMid, C::kHi},
                                                         {C::kLo, C::kHi, C::kMid},
                                                         {C::kMid, C::kLo, C::kHi},
                                                         {C::kMid, C::kHi, C::kLo},
                                                         {C::kHi, C::kLo, C::kMid},
                                                         {C::kHi, C::kMid, C::kLo}}) {
    scalarized.push_back(lexicographic(tri, order));
  }
  std::size_t dominated = 0;
  for (const auto& p : scalarized) {
    for (const auto& q : oracle.points) dominated += dominates(q.theta, p.theta, 1e-6);
  }
  r.details.push_back(std::to_string(scalarized.size()) + " weighted/lexicographic points, " +
                      std::to_string(dominated) + " dominated by the enumerated frontier");
  r.seconds = timer.seconds();
  r.passed = ok && dominated == 0 && r.seconds < 10.0;
  return r;
}

CheckResult check_example_fuzzy(const CcflpInstance& instance, unsigned workers) {
  Timer timer;
  CheckResult r{8, "example fuzzy epsilon-constraint run, grid 8x8 (derived)"};
  const FuzzyCcflpModel built = build_fuzzy_model(instance, CapacityVariant::kDerived);
  const TriObjectiveMilp tri = reformulate(built.model);
  ParetoOptions options;
  options.workers = workers;
  const ParetoSet set = epsilon_constraint_enumerate(tri, {8, 8}, options);

  const double tol = 1e-6;
  std::size_t failures = 0;
  for (const auto& p : set.points) {
    std::string problem;
    try {
      const LiftedSolution lifted = lift_solution(tri, p.decision, tol);
      const Evaluation e = evaluate(built.model, lifted.assignment, tol);
      if (!e.feasible) problem = "violates " + e.violations.front();
      if (!is_auxiliary_feasible(built.model, lifted.assignment, lifted.theta, tol)) problem = "rows exceed theta";
      for (const auto& cols : tri.source_columns) {
        const double lo = p.decision[cols[0]];
        const double mid = p.decision[cols[1]];
        const double hi = p.decision[cols[2]];
        if (lo > mid + tol || mid > hi + tol || lo < -tol) problem = "variable out of shape";
      }
    } catch (const Error& e) {
      problem = e.what();
    }
    if (!(p.theta[0] <= p.theta[1] + tol && p.theta[1] <= p.theta[2] + tol)) problem = "theta out of shape";
    for (const auto& q : set.points) {
      if (dominates(q.theta, p.theta, tol)) problem = "dominated by " + triple2(q.theta);
    }
    failures += !problem.empty();
    r.details.push_back(p.method + " " + triple2(p.theta) + (problem.empty() ? "" : "  FAILED: " + problem));
  }
  r.seconds = timer.seconds();
  r.details.insert(r.details.begin(), std::to_string(set.points.size()) + " nondominated points, " +
                                          std::to_string(failures) + " failed re-checks");
  r.passed = set.points.size() >= 3 && failures == 0 && r.seconds < 300.0;
  return r;
}

std::vector<CheckResult> run_all(const AuditOptions& options, std::ostream* progress) {
  const CcflpInstance instance = load_instance(options.data_dir + "/example1.json");
  std::vector<CheckResult> results;
  const auto run = [&](auto&& check) {
    results.push_back(check());
    if (progress) print(*progress, results.back());
  };
  run([&] { return check_algebra(options.seed); });
  run([&] { return check_theta(options.seed + 1); });
  run([&] { return check_crisp_oracle(options.seed + 2); });
  run([&] { return check_example_crisp(instance); });
  run([&] { return check_reported_triples(); });
  run([&] { return check_triple_feasibility(instance); });
  run([&] { return check_pareto_machinery(); });
  run([&] { return check_example_fuzzy(instance, options.workers); });
  return results;
}

void print(std::ostream& out, const CheckResult& result) {
  out << (result.passed ? "PASS" : "FAIL") << "  criterion " << result.id << ": " << result.title << " ("
      << fmt("%.2f", result.seconds) << " s)\n";
  for (const auto& d : result.details) out << "      " << d << '\n';
  out.flush();
}

}  // namespace fzmm::audit
