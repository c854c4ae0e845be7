#ifndef AFFGROW_ERROR_HPP_
#define AFFGROW_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace affgrow {

enum class ErrorCode {
  NonMonic,
  EmptyModulus,
  NonIntegerModulus,
  Parse,
  MixedParents,
  ZeroDivisor,
  ZeroInput,
  FunctionFieldUnsupported,
  RequiresField,
  IndexOutOfRange,
  NotTwoHomotheties,
  EqualFixedPoints,
  NotHomothety,
  PlaceRingMismatch,
  Precondition,
  MemoryBudget,
  DegreeBudget,
  ZeroConstantTerm,
  InvalidArtifact,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a code so callers (and the
// CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace affgrow

#endif  // AFFGROW_ERROR_HPP_
