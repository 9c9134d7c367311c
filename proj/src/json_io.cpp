#include "fzmm/json_io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "fzmm/error.hpp"

namespace fzmm {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

// Reads a TFN without enforcing the order, so that shape problems can be reported.
std::array<double, 3> raw_triple(const json& value, const std::string& field) {
  if (value.is_number()) {
    const double v = value.get<double>();
    return {v, v, v};
  }
  if (!value.is_array() || value.size() != 3) fail(field + ": expected [lo, mid, hi] or a number");
  std::array<double, 3> t{};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!value[k].is_number()) fail(field + ": component " + std::to_string(k) + " is not a number");
    t[k] = value[k].get<double>();
  }
  return t;
}

std::string describe(const std::array<double, 3>& t) {
  return "[" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) + "]";
}

std::vector<Tfn> read_list(const json& doc, const char* key, std::size_t expected,
                           std::vector<std::string>& problems) {
  if (!doc.contains(key)) fail(std::string("missing field '") + key + "'");
  const json& list = doc.at(key);
  if (!list.is_array()) fail(std::string("field '") + key + "' must be an array");
  if (list.size() != expected) {
    problems.push_back(std::string(key) + " has " + std::to_string(list.size()) + " entries, expected " +
                       std::to_string(expected));
  }
  std::vector<Tfn> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string field = std::string(key) + "[" + std::to_string(k) + "]";
    const auto t = raw_triple(list[k], field);
    if (!std::isfinite(t[0]) || !std::isfinite(t[1]) || !std::isfinite(t[2])) {
      problems.push_back(field + " is not finite");
      out.emplace_back();
    } else if (!(t[0] <= t[1] && t[1] <= t[2])) {
      problems.push_back(field + " = " + describe(t) + " violates lo <= mid <= hi");
      out.emplace_back();
    } else {
      if (t[0] < 0.0) problems.push_back(field + " = " + describe(t) + " is negative");
      out.emplace_back(t[0], t[1], t[2]);
    }
  }
  return out;
}

std::size_t read_size(const json& doc, const char* key) {
  if (!doc.contains(key)) fail(std::string("missing field '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_unsigned()) fail(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

json expression_to_json(const FuzzyLinearExpression& expr, const FuzzyMinimaxModel& model) {
  json terms = json::array();
  for (const Term& t : expr.terms()) {
    terms.push_back({{"var", model.variable(t.variable).name}, {"coef", to_json(t.coefficient)}});
  }
  return {{"terms", terms}, {"constant", to_json(expr.constant())}};
}

FuzzyLinearExpression expression_from_json(const json& doc, const FuzzyMinimaxModel& model,
                                           const std::string& field) {
  FuzzyLinearExpression expr;
  if (doc.contains("constant")) expr.add_constant(tfn_from_json(doc.at("constant"), field + ".constant"));
  if (!doc.contains("terms")) return expr;
  const json& terms = doc.at("terms");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string where = field + ".terms[" + std::to_string(k) + "]";
    const std::string name = terms[k].at("var").get<std::string>();
    const auto ref = model.find(name);
    if (!ref) throw Error(ErrorCode::kUnknownVariable, where + ": '" + name + "'");
    expr.add_term(tfn_from_json(terms[k].at("coef"), where + ".coef"), *ref);
  }
  return expr;
}

}  // namespace

json to_json(const Tfn& value) {
  if (value.is_degenerate()) return value.mid();
  return json::array({value.lo(), value.mid(), value.hi()});
}

Tfn tfn_from_json(const json& value, const std::string& field) {
  const auto t = raw_triple(value, field);
  if (!(t[0] <= t[1] && t[1] <= t[2])) fail(field + " = " + describe(t) + " violates lo <= mid <= hi");
  return Tfn(t[0], t[1], t[2]);
}

InstanceInspection inspect_instance(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("instance must be a JSON object");

  InstanceInspection report;
  report.n = read_size(doc, "n");
  report.m = read_size(doc, "m");
  CcflpInstance inst;
  inst.n = report.n;
  inst.m = report.m;
  auto& problems = report.problems;
  inst.demand = read_list(doc, "d", inst.n, problems);
  inst.capacity = read_list(doc, "u", inst.m, problems);
  inst.setup_cost = read_list(doc, "f", inst.m, problems);
  if (!doc.contains("c")) fail("missing field 'c'");
  const json& c = doc.at("c");
  if (!c.is_array()) fail("field 'c' must be an array of rows");
  if (c.size() != inst.n) {
    problems.push_back("c has " + std::to_string(c.size()) + " rows, expected " + std::to_string(inst.n));
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    const json row = json{{"c[" + std::to_string(i) + "]", c[i]}};
    inst.cost.push_back(read_list(row, ("c[" + std::to_string(i) + "]").c_str(), inst.m, problems));
  }
  if (inst.n == 0 || inst.m == 0) problems.push_back("n and m must be positive");
  if (problems.empty()) report.instance = std::move(inst);
  return report;
}

CcflpInstance read_instance(std::istream& in) {
  InstanceInspection report = inspect_instance(in);
  if (!report.instance) {
    std::string what = "invalid instance:";
    for (const auto& p : report.problems) what += "\n  " + p;
    fail(what);
  }
  return std::move(*report.instance);
}

CcflpInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open instance file '" + path + "'");
  return read_instance(in);
}

void write_instance(std::ostream& out, const CcflpInstance& instance) {
  json doc;
  doc["n"] = instance.n;
  doc["m"] = instance.m;
  const auto list = [](const std::vector<Tfn>& values) {
    json a = json::array();
    for (const Tfn& v : values) a.push_back(to_json(v));
    return a;
  };
  doc["d"] = list(instance.demand);
  doc["u"] = list(instance.capacity);
  doc["f"] = list(instance.setup_cost);
  doc["c"] = json::array();
  for (const auto& row : instance.cost) doc["c"].push_back(list(row));
  out << doc.dump(2) << '\n';
}

json model_to_json(const FuzzyMinimaxModel& model) {
  json doc;
  doc["variables"] = json::array();
  for (const VariableRef& v : model.variables()) {
    doc["variables"].push_back(
        {{"name", v.name}, {"kind", v.kind == VariableKind::kCrispBinary ? "binary" : "fuzzy"}});
  }
  doc["minimax_rows"] = json::array();
  for (const auto& row : model.minimax_rows()) doc["minimax_rows"].push_back(expression_to_json(row, model));
  doc["constraints"] = json::array();
  for (const FuzzyConstraint& c : model.constraints()) {
    doc["constraints"].push_back({{"name", c.name},
                                  {"relation", c.relation == FuzzyRelation::kEqual ? "=" : "<~"},
                                  {"lhs", expression_to_json(c.lhs, model)},
                                  {"rhs", expression_to_json(c.rhs, model)}});
  }
  return doc;
}

FuzzyMinimaxModel model_from_json(const json& doc) {
  FuzzyMinimaxModel model;
  try {
    for (const json& v : doc.at("variables")) {
      const std::string kind = v.at("kind").get<std::string>();
      if (kind != "binary" && kind != "fuzzy") fail("unknown variable kind '" + kind + "'");
      model.add_variable(v.at("name").get<std::string>(),
                         kind == "binary" ? VariableKind::kCrispBinary : VariableKind::kFuzzyNonnegative);
    }
    std::vector<FuzzyLinearExpression> rows;
    const json& row_docs = doc.at("minimax_rows");
    for (std::size_t r = 0; r < row_docs.size(); ++r) {
      rows.push_back(expression_from_json(row_docs[r], model, "minimax_rows[" + std::to_string(r) + "]"));
    }
    if (!rows.empty()) model.set_minimax_rows(std::move(rows));
    const json& cons = doc.at("constraints");
    for (std::size_t k = 0; k < cons.size(); ++k) {
      const std::string field = "constraints[" + std::to_string(k) + "]";
      const std::string rel = cons[k].at("relation").get<std::string>();
      if (rel != "=" && rel != "<~") fail(field + ": unknown relation '" + rel + "'");
      model.add_constraint(expression_from_json(cons[k].at("lhs"), model, field + ".lhs"),
                           rel == "=" ? FuzzyRelation::kEqual : FuzzyRelation::kLessOrApprox,
                           expression_from_json(cons[k].at("rhs"), model, field + ".rhs"),
                           cons[k].value("name", std::string{}));
    }
  } catch (const json::exception& e) {
    fail(std::string("malformed model document: ") + e.what());
  }
  return model;
}

}  // namespace fzmm
