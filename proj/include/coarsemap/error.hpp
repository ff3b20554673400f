#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coarsemap {

enum class ErrorCode {
  // usage / precondition
  InvalidArgument,
  NonPositiveEpsilon,
  SiteSetMismatch,
  EpsilonTooSmall,
  EmptyGrid,
  SupportOutOfRange,
  OverlappingSupports,
  SubsetTooLarge,
  DimensionMismatch,
  // data
  CapExceeded,
  NegativeEntry,
  NonFinite,
  AsymmetricInput,
  InsufficientData,
  InsufficientPairs,
  ZeroValuesInWindow,
  NoPairsBeyondR0,
  NonPositiveFunction,
  ParseError,
  SpecError,
  // numeric
  NonConvergence,
  MaxIterExceeded,
};

/// Exit-code class used by the command-line tool: 1 usage, 2 data, 3 numeric.
enum class ErrorClass { Usage = 1, Data = 2, Numeric = 3 };

std::string_view to_string(ErrorCode code);
ErrorClass classify(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorClass error_class() const noexcept { return classify(code_); }

 private:
  ErrorCode code_;
};

}  // namespace coarsemap
