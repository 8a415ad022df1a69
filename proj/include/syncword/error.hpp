#pragma once

#include <stdexcept>
#include <string>

namespace syncword {

enum class ErrorCode {
  invalid_argument,
  invalid_word,
  alphabet_mismatch,
  missing_acceptance,
  precondition,
  cap_exceeded,
  overflow,
  parse,
  internal,
};

const char* to_string(ErrorCode code);

/// Raised for malformed inputs and violated preconditions. Mathematical
/// refutations (a state that is not a corner, an unsynchronizable pair) are
/// returned as values by the strategies instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace syncword
