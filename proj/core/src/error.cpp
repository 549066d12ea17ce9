#include "carter/error.hpp"

namespace carter {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MixedDegree: return "MixedDegree";
    case ErrorCode::MalformedPermutation: return "MalformedPermutation";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NontrivialCenter: return "NontrivialCenter";
    case ErrorCode::NotMinimalNormal: return "NotMinimalNormal";
    case ErrorCode::AbelianFactor: return "AbelianFactor";
    case ErrorCode::NotCarter: return "NotCarter";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::StarFails: return "StarFails";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::CentralizerNotTrivial: return "CentralizerNotTrivial";
    case ErrorCode::NoBlockSystem: return "NoBlockSystem";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotALatinSquare: return "NotALatinSquare";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string const& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::string const& message)
    : Error(ErrorCode::ParseError, "line " + std::to_string(line) +
                                       ", column " + std::to_string(column) +
                                       ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

void fail(ErrorCode code, std::string const& message) {
  throw Error(code, message);
}

}  // namespace carter
