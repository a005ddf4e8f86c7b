#include "fiveclass/error.hpp"

namespace fiveclass {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::InvalidForm: return "InvalidForm";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::InvalidExpression: return "InvalidExpression";
    case ErrorCode::StarInSmooth: return "StarInSmooth";
    case ErrorCode::CategoryMismatch: return "CategoryMismatch";
    case ErrorCode::NoStandardForm: return "NoStandardForm";
    case ErrorCode::WrongDivisibility: return "WrongDivisibility";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::NonIntegralK: return "NonIntegralK";
    case ErrorCode::RangeExceeded: return "RangeExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
  }
  return "Unknown";
}

}  // namespace fiveclass
