#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace georeduce {

enum class ErrorCode {
  kDegenerateInput,
  kInvalidInput,
  kTeethOverlap,
  kTangencyUnresolved,
  kThresholdCoincidence,
  kNonpositiveParameter,
  kInfeasibleWitness,
  kDegreeViolation,
  kUncoverableElement,
  kBudgetExceeded,
  kMembershipMismatch,
  kConditionViolation,
  kPerturbationExhausted,
  kAdjacencyMismatch,
  kKindMismatch,
  kParseError,
};

std::string_view error_code_name(ErrorCode code);

// Every typed failure in the library is reported through this exception; the
// code lets callers (and the CLI exit-status mapping) branch without parsing
// the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace georeduce
