#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace p1inv {

enum class ErrorKind {
  LoopEdge,
  VertexOutOfRange,
  VertexCountMismatch,
  OddDegreeSum,
  InvalidWeight,
  SharedEndpoint,
  NonContiguousClump,
  LengthMismatch,
  NoStableConfiguration,
  InvalidPoint,
  NotNeutralRegular,
  NotRegular,
  OddVertexCount,
  NotMultipleOfWeight,
  NotAMatching,
  VertexCountTooSmall,
  BadExponent,
  DegreeMismatch,
  OddTotalWeight,
  EmptyModuli,
  DegenerateModuli,
  NotInChart,
  DimensionMismatch,
  ParseError,
};

std::string_view error_name(ErrorKind kind);

/// Every failure raised by the library carries one of the named kinds above;
/// what() is prefixed with the kind name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace p1inv
