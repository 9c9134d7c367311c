#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fzmm {

enum class ErrorCode {
  kNotSorted,
  kAlphaOutOfRange,
  kRequiresNonnegativeOperand,
  kEmptySet,
  kDuplicateName,
  kUnknownVariable,
  kEmptyObjective,
  kIncompleteAssignment,
  kKindMismatch,
  kInfeasiblePoint,
  kMalformedProgram,
  kNonpositiveWeight,
  kInvalidOrder,
  kUnknownVariant,
  kParseError,
  kSolverFailure,
  kInfeasible,
  kUnbounded,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this exception; `code()` lets
// callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fzmm
