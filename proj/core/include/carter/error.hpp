#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace carter {

enum class ErrorCode {
  MixedDegree,
  MalformedPermutation,
  NotAMember,
  NotASubgroup,
  NotNormal,
  GroupTooLarge,
  NontrivialCenter,
  NotMinimalNormal,
  AbelianFactor,
  NotCarter,
  NotCentral,
  StarFails,
  NotTransitive,
  CentralizerNotTrivial,
  NoBlockSystem,
  HypothesisViolated,
  UnknownFamily,
  ParseError,
  DegreeMismatch,
  NotALatinSquare,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above, so
// callers (the corpus runner in particular) can tell precondition violations
// apart from genuine contract failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::string const& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, std::string const& message);

}  // namespace carter
