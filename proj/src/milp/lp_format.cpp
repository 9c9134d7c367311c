#include "fzmm/lp_format.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "fzmm/error.hpp"

namespace fzmm::milp {
namespace {

std::string number(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  if (v == 0.0) return "0";
  // Shortest text that reads back to the same double.
  char buf[32];
  const auto end = std::to_chars(buf, buf + sizeof buf, v).ptr;
  return std::string(buf, end);
}

void write_terms(std::ostream& out, const std::vector<Entry>& entries, const LinearProgram& lp) {
  if (entries.empty()) {
    out << " 0";
    return;
  }
  for (const Entry& e : entries) {
    out << (e.value < 0.0 ? " - " : " + ") << number(std::abs(e.value)) << ' '
        << lp.names()[e.column];
  }
}

const char* sense_token(RowSense sense) {
  switch (sense) {
    case RowSense::kLessEqual: return "<=";
    case RowSense::kEqual: return "=";
    case RowSense::kGreaterEqual: return ">=";
  }
  return "?";
}

struct PendingRow {
  std::string name;
  std::vector<std::pair<std::string, double>> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

struct PendingBound {
  double lower = 0.0;
  double upper = kInf;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

double parse_number(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) fail(line, "bad number '" + token + "'");
    return v;
  } catch (const std::invalid_argument&) {
    fail(line, "bad number '" + token + "'");
  } catch (const std::out_of_range&) {
    fail(line, "number out of range '" + token + "'");
  }
}

bool is_number(const std::string& token) {
  if (token.empty()) return false;
  const char c = token[0];
  return std::isdigit(static_cast<unsigned char>(c)) || c == '.' ||
         ((c == '-' || c == '+') && token.size() > 1) || token == "inf";
}

// Parses "[name:] terms [sense rhs]" into `row`; returns false if no sense was present.
bool parse_expression(const std::string& text, std::size_t line, PendingRow& row) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  std::size_t k = 0;
  if (!tokens.empty() && tokens[0].back() == ':') {
    row.name = tokens[0].substr(0, tokens[0].size() - 1);
    k = 1;
  }
  double sign = 1.0;
  double coefficient = 1.0;
  bool have_coefficient = false;
  for (; k < tokens.size(); ++k) {
    const std::string& t = tokens[k];
    if (t == "<=" || t == ">=" || t == "=" || t == "=<" || t == "=>") {
      row.sense = (t == "<=" || t == "=<") ? RowSense::kLessEqual
                  : (t == "=")             ? RowSense::kEqual
                                           : RowSense::kGreaterEqual;
      if (k + 2 != tokens.size()) fail(line, "expected a single right-hand side");
      row.rhs = parse_number(tokens[k + 1], line);
      return true;
    }
    if (t == "+" || t == "-") {
      sign = t == "-" ? -1.0 : 1.0;
      continue;
    }
    if (is_number(t)) {
      coefficient = parse_number(t, line);
      have_coefficient = true;
      continue;
    }
    row.terms.emplace_back(t, sign * (have_coefficient ? coefficient : 1.0));
    sign = 1.0;
    coefficient = 1.0;
    have_coefficient = false;
  }
  return false;
}

}  // namespace

void write_lp_text(std::ostream& out, const TextProgram& text) {
  const LinearProgram& lp = text.program;
  for (const auto& c : text.comments) out << "\\ " << c << '\n';
  out << (text.objectives.size() > 1 ? "Minimize multi-objectives\n" : "Minimize\n");
  for (const auto& obj : text.objectives) {
    out << ' ' << obj.name << ':';
    write_terms(out, obj.entries, lp);
    out << '\n';
  }
  out << "Subject To\n";
  for (const Row& row : lp.rows()) {
    out << ' ' << row.name << ':';
    write_terms(out, row.entries, lp);
    out << ' ' << sense_token(row.sense) << ' ' << number(row.rhs) << '\n';
  }
  // Every column is listed so the reader recovers the column order.
  out << "Bounds\n";
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    const double lo = lp.lower()[j];
    const double up = lp.upper()[j];
    if (lo == -kInf && up == kInf) {
      out << ' ' << lp.names()[j] << " free\n";
    } else {
      out << ' ' << number(lo) << " <= " << lp.names()[j] << " <= " << number(up) << '\n';
    }
  }
  if (!text.binaries.empty()) {
    out << "Binaries\n";
    for (std::size_t b : text.binaries) out << ' ' << lp.names()[b] << '\n';
  }
  out << "End\n";
}

TextProgram read_lp_text(std::istream& in) {
  enum class Section { kNone, kObjective, kConstraints, kBounds, kBinaries, kEnd };
  Section section = Section::kNone;
  std::vector<PendingRow> objectives;
  std::vector<PendingRow> rows;
  std::vector<std::string> order;
  std::map<std::string, PendingBound> bounds;
  std::vector<std::string> binaries;
  std::vector<std::string> comments;
  std::vector<std::string> seen;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    std::string line = raw.substr(first);
    if (line.rfind("\\", 0) == 0) {
      comments.push_back(line.size() > 2 ? line.substr(2) : std::string{});
      continue;
    }
    if (line.rfind("Minimize", 0) == 0) {
      section = Section::kObjective;
      continue;
    }
    if (line == "Subject To") {
      section = Section::kConstraints;
      continue;
    }
    if (line == "Bounds") {
      section = Section::kBounds;
      continue;
    }
    if (line == "Binaries") {
      section = Section::kBinaries;
      continue;
    }
    if (line == "End") {
      section = Section::kEnd;
      continue;
    }
    switch (section) {
      case Section::kObjective: {
        PendingRow obj;
        if (parse_expression(line, line_no, obj)) fail(line_no, "objective with a relation");
        if (obj.name.empty()) obj.name = "OBJ" + std::to_string(objectives.size());
        objectives.push_back(std::move(obj));
        break;
      }
      case Section::kConstraints: {
        PendingRow row;
        if (!parse_expression(line, line_no, row)) fail(line_no, "constraint without a relation");
        if (row.name.empty()) row.name = "R" + std::to_string(rows.size());
        rows.push_back(std::move(row));
        break;
      }
      case Section::kBounds: {
        std::istringstream s(line);
        std::vector<std::string> t;
        for (std::string tok; s >> tok;) t.push_back(tok);
        if (t.size() == 2 && t[1] == "free") {
          bounds[t[0]] = {-kInf, kInf};
          order.push_back(t[0]);
        } else if (t.size() == 5 && t[1] == "<=" && t[3] == "<=") {
          bounds[t[2]] = {parse_number(t[0], line_no), parse_number(t[4], line_no)};
          order.push_back(t[2]);
        } else {
          fail(line_no, "unrecognized bound '" + line + "'");
        }
        break;
      }
      case Section::kBinaries: {
        std::istringstream s(line);
        for (std::string tok; s >> tok;) binaries.push_back(tok);
        break;
      }
      case Section::kNone:
        fail(line_no, "content before the objective section");
      case Section::kEnd:
        fail(line_no, "content after End");
    }
  }
  if (section != Section::kEnd) fail(line_no, "missing End");

  TextProgram text;
  text.comments = std::move(comments);
  std::map<std::string, std::size_t> column;
  const auto declare = [&](const std::string& name) {
    if (column.count(name)) return;
    const auto b = bounds.count(name) ? bounds[name] : PendingBound{};
    column[name] = text.program.add_variable(b.lower, b.upper, 0.0, name);
  };
  for (const auto& name : order) declare(name);
  const auto to_entries = [&](const PendingRow& row) {
    std::vector<Entry> entries;
    for (const auto& [name, value] : row.terms) {
      declare(name);
      entries.push_back({column[name], value});
    }
    return entries;
  };
  for (const auto& obj : objectives) text.objectives.push_back({obj.name, to_entries(obj)});
  for (const auto& row : rows) text.program.add_row(to_entries(row), row.sense, row.rhs, row.name);
  for (const auto& name : binaries) {
    declare(name);
    text.binaries.push_back(column[name]);
  }
  return text;
}

}  // namespace fzmm::milp

namespace fzmm {

milp::TextProgram to_text_program(const TriObjectiveMilp& milp) {
  milp::TextProgram text;
  text.program = milp.program;
  text.binaries = milp.binaries;
  const char* names[3] = {"THETA_LO", "THETA_MID", "THETA_HI"};
  for (std::size_t k = 0; k < 3; ++k) {
    text.objectives.push_back({names[k], {{milp.theta[k], 1.0}}});
  }
  return text;
}

}  // namespace fzmm
