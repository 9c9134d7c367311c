#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "audit.hpp"
#include "fzmm/ccflp.hpp"
#include "fzmm/error.hpp"
#include "fzmm/json_io.hpp"
#include "fzmm/lp_format.hpp"
#include "fzmm/pareto.hpp"
#include "fzmm/reformulate.hpp"

namespace {

using namespace fzmm;

enum Exit { kOk = 0, kNoOptimum = 1, kBadInput = 2, kInternal = 3 };

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasible:
    case ErrorCode::kUnbounded:
      return kNoOptimum;
    case ErrorCode::kSolverFailure:
    case ErrorCode::kInfeasiblePoint:
    case ErrorCode::kIncompleteAssignment:
    case ErrorCode::kKindMismatch:
    case ErrorCode::kMalformedProgram:
      return kInternal;
    default:
      return kBadInput;
  }
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string triple2(double a, double b, double c) {
  return "(" + fixed2(a) + ", " + fixed2(b) + ", " + fixed2(c) + ")";
}

std::string triple2(const Tfn& t) { return triple2(t.lo(), t.mid(), t.hi()); }

Component parse_component(const std::string& s) {
  if (s == "lo") return Component::kLo;
  if (s == "mid") return Component::kMid;
  if (s == "hi") return Component::kHi;
  throw Error(ErrorCode::kInvalidOrder, "unknown component '" + s + "' (expected lo, mid or hi)");
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string p; std::getline(in, p, ',');) parts.push_back(p);
  return parts;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write '" + path + "'");
  return out;
}

void print_network(std::ostream& out, const AssignmentNetwork& net) {
  out << "open facilities:";
  for (std::size_t j : net.open_facilities) out << ' ' << j + 1;
  out << '\n';
  for (const auto& [edge, flow] : net.flows) {
    out << "  " << edge.first + 1 << " -> " << edge.second + 1 << ": "
        << (flow.is_degenerate() ? fixed2(flow.mid()) : triple2(flow)) << '\n';
  }
}

int cmd_validate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open instance file '" + path + "'");
  const InstanceInspection report = inspect_instance(in);
  std::cout << "n = " << report.n << ", m = " << report.m << '\n';
  for (const auto& p : report.problems) std::cout << "  " << p << '\n';
  std::cout << (report.instance ? "valid" : "invalid") << '\n';
  return report.instance ? kOk : kBadInput;
}

int cmd_solve_crisp(const std::string& path, const std::string& selector, const std::string& out_path) {
  const CcflpInstance instance = load_instance(path);
  const CrispCcflpModel model = build_crisp_model(instance, parse_component(selector));
  const milp::MilpSolution sol = milp::solve_milp(model.program, model.binaries);
  std::cout << "selector: " << selector << '\n' << "status: " << milp::to_string(sol.status) << '\n';
  if (sol.status != milp::SolveStatus::kOptimal) return kNoOptimum;
  std::cout << "objective: " << fixed2(sol.objective) << '\n';
  const AssignmentNetwork net = extract_crisp_network(model, sol.point);
  print_network(std::cout, net);
  if (!out_path.empty()) {
    std::ofstream out = open_out(out_path);
    write_dot(out, instance, net, "crisp solution (" + selector + ")");
  }
  return kOk;
}

int cmd_reformulate(const std::string& path, const std::string& variant, const std::string& out_path) {
  const CcflpInstance instance = load_instance(path);
  const FuzzyCcflpModel built = build_fuzzy_model(instance, parse_variant(variant));
  milp::TextProgram text = to_text_program(reformulate(built.model));
  text.comments.push_back("capacity variant: " + variant);
  if (out_path.empty()) {
    milp::write_lp_text(std::cout, text);
  } else {
    std::ofstream out = open_out(out_path);
    milp::write_lp_text(out, text);
  }
  return kOk;
}

struct ParetoArgs {
  std::string variant = "derived";
  std::string method = "eps";
  std::string weights = "1,1,1";
  std::string order = "lo,mid,hi";
  std::string grid = "8,8";
  double tol = 1e-6;
  std::string out;
  unsigned workers = 0;
};

int cmd_pareto(const std::string& path, const ParetoArgs& args) {
  const CcflpInstance instance = load_instance(path);
  const FuzzyCcflpModel built = build_fuzzy_model(instance, parse_variant(args.variant));
  const TriObjectiveMilp tri = reformulate(built.model);
  ParetoOptions options;
  options.tol = args.tol;
  options.workers = args.workers ? args.workers : std::max(1u, std::thread::hardware_concurrency());

  ParetoSet set;
  if (args.method == "weighted") {
    const auto parts = split(args.weights);
    if (parts.size() != 3) throw Error(ErrorCode::kNonpositiveWeight, "--weights needs three values");
    std::array<double, 3> w{};
    for (std::size_t k = 0; k < 3; ++k) {
      try {
        w[k] = std::stod(parts[k]);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParseError, "bad weight '" + parts[k] + "'");
      }
    }
    set.points.push_back(weighted_sum(tri, w, options));
  } else if (args.method == "lex") {
    const auto parts = split(args.order);
    if (parts.size() != 3) throw Error(ErrorCode::kInvalidOrder, "--order needs three components");
    set.points.push_back(lexicographic(
        tri, {parse_component(parts[0]), parse_component(parts[1]), parse_component(parts[2])}, options));
  } else if (args.method == "eps") {
    const auto parts = split(args.grid);
    GridSize grid;
    try {
      if (parts.size() != 2) throw std::invalid_argument("grid");
      grid = {std::stoul(parts[0]), std::stoul(parts[1])};
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "--grid expects two counts, e.g. 8,8");
    }
    set = epsilon_constraint_enumerate(tri, grid, options);
  } else {
    throw Error(ErrorCode::kParseError, "unknown method '" + args.method + "' (expected weighted, lex or eps)");
  }

  std::cout << "variant: " << args.variant << ", method: " << args.method << '\n';
  std::cout << set.points.size() << " nondominated point(s)\n";
  for (std::size_t k = 0; k < set.points.size(); ++k) {
    const ParetoPoint& p = set.points[k];
    std::cout << "  " << k + 1 << "  " << p.method << "  theta = " << triple2(p.theta[0], p.theta[1], p.theta[2])
              << '\n';
  }
  if (!args.out.empty()) {
    std::ofstream csv = open_out(args.out + ".csv");
    write_csv(csv, set, tri.program);
    for (std::size_t k = 0; k < set.points.size(); ++k) {
      const LiftedSolution lifted = lift_solution(tri, set.points[k].decision, args.tol);
      const AssignmentNetwork net = extract_network(built, lifted.assignment, lifted.theta, args.tol);
      std::ofstream dot = open_out(args.out + "_" + std::to_string(k + 1) + ".dot");
      write_dot(dot, instance, net, set.points[k].method);
    }
    std::cout << "wrote " << args.out << ".csv and " << set.points.size() << " DOT file(s)\n";
  }
  return kOk;
}

int cmd_check(const std::string& data_dir, unsigned workers) {
  audit::AuditOptions options;
  options.data_dir = data_dir;
  options.workers = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
  const auto results = audit::run_all(options, &std::cout);
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  std::cout << results.size() - failed << " of " << results.size() << " checks passed\n";
  return failed ? kNoOptimum : kOk;
}

int cmd_gen_random(std::size_t n, std::size_t m, std::uint64_t seed, bool crisp, const std::string& out_path) {
  const CcflpInstance instance = random_instance(n, m, seed, crisp);
  if (out_path.empty()) {
    write_instance(std::cout, instance);
  } else {
    std::ofstream out = open_out(out_path);
    write_instance(out, instance);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully fuzzy minimax mixed 0-1 programs and fuzzy center facility location"};
  app.require_subcommand(1);

  std::string instance;
  std::string out;
  std::string selector = "mid";
  std::string data_dir = FZMM_DATA_DIR;
  unsigned workers = 0;
  ParetoArgs pareto;
  std::size_t n = 6;
  std::size_t m = 6;
  std::uint64_t seed = 1;
  bool crisp = false;

  auto* validate = app.add_subcommand("validate", "check an instance file");
  validate->add_option("instance", instance)->required();

  auto* solve_crisp = app.add_subcommand("solve-crisp", "solve the crisp model at one component");
  solve_crisp->add_option("instance", instance)->required();
  solve_crisp->add_option("--selector", selector, "lo, mid or hi")->capture_default_str();
  solve_crisp->add_option("--out", out, "DOT file for the network");

  auto* reform = app.add_subcommand("reformulate", "emit the three-objective MILP as LP text");
  reform->add_option("instance", instance)->required();
  reform->add_option("--variant", pareto.variant, "derived or literal")->capture_default_str();
  reform->add_option("--out", out, "output file (default stdout)");

  auto* par = app.add_subcommand("pareto", "compute nondominated fuzzy solutions");
  par->add_option("instance", instance)->required();
  par->add_option("--variant", pareto.variant, "derived or literal")->capture_default_str();
  par->add_option("--method", pareto.method, "weighted, lex or eps")->capture_default_str();
  par->add_option("--weights", pareto.weights, "a,b,c")->capture_default_str();
  par->add_option("--order", pareto.order, "permutation of lo,mid,hi")->capture_default_str();
  par->add_option("--grid", pareto.grid, "n2,n3")->capture_default_str();
  par->add_option("--tol", pareto.tol)->capture_default_str();
  par->add_option("--out", pareto.out, "prefix for the CSV and DOT files");
  par->add_option("--workers", pareto.workers, "threads (0 = all cores)");

  auto* check = app.add_subcommand("check-paper", "run the reproduction checks on the bundled example");
  check->add_option("--data", data_dir, "directory holding example1.json")->capture_default_str();
  check->add_option("--workers", workers, "threads (0 = all cores)");

  auto* gen = app.add_subcommand("gen-random", "write a seeded random instance");
  gen->add_option("--n", n)->capture_default_str();
  gen->add_option("--m", m)->capture_default_str();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_flag("--crisp", crisp, "degenerate data");
  gen->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*validate) return cmd_validate(instance);
    if (*solve_crisp) return cmd_solve_crisp(instance, selector, out);
    if (*reform) return cmd_reformulate(instance, pareto.variant, out);
    if (*par) return cmd_pareto(instance, pareto);
    if (*check) return cmd_check(data_dir, workers);
    if (*gen) return cmd_gen_random(n, m, seed, crisp, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
