#include "hyperrcd/errors.hpp"

namespace hyperrcd {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateHyperedge: return "DegenerateHyperedge";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::UnbalancedMeasures: return "UnbalancedMeasures";
    case ErrorCode::LabelLengthMismatch: return "LabelLengthMismatch";
    case ErrorCode::VertexSetMismatch: return "VertexSetMismatch";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::NonFiniteWeight: return "NonFiniteWeight";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace hyperrcd
