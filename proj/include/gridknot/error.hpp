#pragma once

#include <stdexcept>
#include <string>

namespace gridknot {

enum class ErrorCode {
  SizeError,
  RowCountError,
  DegenerateColumn,
  SelfRow,
  InapplicableMove,
  NotAKnot,
  LimitExceeded,
  NotTrivialInput,
  ResourceLimit,
  DegenerateGeometry,
  SweepObstruction,
  IllegalMoveAtSite,
  UnknownFormat,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Domain error carrying a machine-readable code. Everything the library
/// rejects for a reason the caller can act on is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gridknot
