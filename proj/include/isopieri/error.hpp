#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isopieri {

enum class ErrorCode {
  InvalidParameters,
  InvalidSymbol,
  WrongLieType,
  LengthMismatch,
  NotLeq,
  NotPreceq,
  SizeLimitExceeded,
  UnknownSymbol,
  ModulusMismatch,
  Overflow,
  InvalidSpecial,
  PreconditionViolated,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace isopieri
