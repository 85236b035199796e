#include "rgdual/errors.hpp"

namespace rgdual {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::HasFixedPoint: return "HasFixedPoint";
    case ErrorCode::HypermapDetected: return "HypermapDetected";
    case ErrorCode::BadEdgeLabels: return "BadEdgeLabels";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::NonOrientableInGenusMode: return "NonOrientableInGenusMode";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace rgdual
