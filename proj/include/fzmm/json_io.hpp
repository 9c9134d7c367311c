#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fzmm/ccflp.hpp"
#include "fzmm/model.hpp"
#include "fzmm/tfn.hpp"

namespace fzmm {

/// [lo, mid, hi], or a bare number for a degenerate value.
nlohmann::json to_json(const Tfn& value);
/// Throws kParseError naming `field` for anything but a sorted triple or a number.
Tfn tfn_from_json(const nlohmann::json& value, const std::string& field);

struct InstanceInspection {
  std::size_t n = 0;
  std::size_t m = 0;
  // Shape, sign and dimension problems, one line each.
  std::vector<std::string> problems;
  // Set only when problems is empty.
  std::optional<CcflpInstance> instance;
};

/// Reads an instance document and collects every data problem instead of
/// stopping at the first. Malformed JSON and wrong field types throw kParseError.
InstanceInspection inspect_instance(std::istream& in);
/// Throws kParseError listing the problems of an invalid instance.
CcflpInstance read_instance(std::istream& in);
/// Throws kParseError naming the file when it cannot be opened.
CcflpInstance load_instance(const std::string& path);
void write_instance(std::ostream& out, const CcflpInstance& instance);

nlohmann::json model_to_json(const FuzzyMinimaxModel& model);
FuzzyMinimaxModel model_from_json(const nlohmann::json& doc);

}  // namespace fzmm
