#include "fzmm/error.hpp"

namespace fzmm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSorted: return "NotSorted";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kRequiresNonnegativeOperand: return "RequiresNonnegativeOperand";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kDuplicateName: return "DuplicateName";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kEmptyObjective: return "EmptyObjective";
    case ErrorCode::kIncompleteAssignment: return "IncompleteAssignment";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kInfeasiblePoint: return "InfeasiblePoint";
    case ErrorCode::kMalformedProgram: return "MalformedProgram";
    case ErrorCode::kNonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kUnknownVariant: return "UnknownVariant";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSolverFailure: return "SolverFailure";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kUnbounded: return "Unbounded";
  }
  return "Unknown";
}

}  // namespace fzmm
