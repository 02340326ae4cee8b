#include "p1inv/error.hpp"

namespace p1inv {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::VertexCountMismatch: return "VertexCountMismatch";
    case ErrorKind::OddDegreeSum: return "OddDegreeSum";
    case ErrorKind::InvalidWeight: return "InvalidWeight";
    case ErrorKind::SharedEndpoint: return "SharedEndpoint";
    case ErrorKind::NonContiguousClump: return "NonContiguousClump";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NoStableConfiguration: return "NoStableConfiguration";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::NotNeutralRegular: return "NotNeutralRegular";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::OddVertexCount: return "OddVertexCount";
    case ErrorKind::NotMultipleOfWeight: return "NotMultipleOfWeight";
    case ErrorKind::NotAMatching: return "NotAMatching";
    case ErrorKind::VertexCountTooSmall: return "VertexCountTooSmall";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::OddTotalWeight: return "OddTotalWeight";
    case ErrorKind::EmptyModuli: return "EmptyModuli";
    case ErrorKind::DegenerateModuli: return "DegenerateModuli";
    case ErrorKind::NotInChart: return "NotInChart";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace p1inv
