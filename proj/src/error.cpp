#include "strata/error.hpp"

namespace strata {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompatibleSplits: return "IncompatibleSplits";
    case ErrorCode::UnstableTree: return "UnstableTree";
    case ErrorCode::BadLeaf: return "BadLeaf";
    case ErrorCode::NoSuchSplit: return "NoSuchSplit";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::BadComposition: return "BadComposition";
    case ErrorCode::NotTrivalent: return "NotTrivalent";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::MalformedSchedule: return "MalformedSchedule";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorCode::BadParametrization: return "BadParametrization";
    case ErrorCode::NotCaterpillar: return "NotCaterpillar";
    case ErrorCode::NoValidLabeling: return "NoValidLabeling";
    case ErrorCode::PatternViolation: return "PatternViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace strata
