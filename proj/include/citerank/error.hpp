#pragma once

#include <stdexcept>
#include <string>

namespace citerank {

enum class ErrorCode {
  InvalidArgument,
  Io,
  Parse,
  DuplicateId,
  Degenerate,
  Numeric,
  NotFound,
  TooLarge,
};

// Every failure raised by the library carries one of the codes above so the
// C API can map it onto a status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace citerank
