#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fzmm/milp.hpp"
#include "fzmm/reformulate.hpp"

namespace fzmm::milp {

struct NamedObjective {
  std::string name;
  std::vector<Entry> entries;
};

/// A program in the LP-style text export: rows, bounds, binaries, and one or
/// more named minimization objectives. `program` costs are ignored on write.
struct TextProgram {
  LinearProgram program;
  std::vector<std::size_t> binaries;
  std::vector<NamedObjective> objectives;
  std::vector<std::string> comments;
};

void write_lp_text(std::ostream& out, const TextProgram& text);

/// Throws Error(kParseError) with a line number on malformed input.
TextProgram read_lp_text(std::istream& in);

}  // namespace fzmm::milp

namespace fzmm {

/// Export view of a three-objective program; objectives are THETA_LO,
/// THETA_MID and THETA_HI.
milp::TextProgram to_text_program(const TriObjectiveMilp& milp);

}  // namespace fzmm
