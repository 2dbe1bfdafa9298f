#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strata {

enum class ErrorCode {
  IncompatibleSplits,
  UnstableTree,
  BadLeaf,
  NoSuchSplit,
  BadLabel,
  BoundExceeded,
  BadComposition,
  NotTrivalent,
  UnsupportedShape,
  MalformedSchedule,
  BadDegree,
  DegenerateRestriction,
  BadParametrization,
  NotCaterpillar,
  NoValidLabeling,
  PatternViolation,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; `code()` identifies the
// contract that was violated.
class StrataError : public std::runtime_error {
 public:
  StrataError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace strata
