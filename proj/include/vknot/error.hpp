#pragma once

#include <stdexcept>
#include <string>

namespace vknot {

enum class ErrorKind {
  MalformedToken,
  LabelCountNotTwo,
  RoleDuplicated,
  SignMismatch,
  UnknownCrossing,
  ArcOutOfRange,
  InvalidSite,
  IndexOutOfRange,
  Disconnected,
  NonterminatingRelocation,
  SizeLimit,
  BadParameter,
  ConditionViolated,
  MalformedJson,
};

const char* error_name(ErrorKind kind);

/// Domain error raised by the library; `kind()` names the failure for the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace vknot
