#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordlat {

enum class ErrorKind {
  invalid_generator,
  backend_mismatch,
  wrong_backend,
  syntax,
  identity_sign,
  outside_domain,
  cap_exceeded,
  precision_exhausted,
  incomplete_lo_space,
  invalid_argument,
  io,
  internal,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map it to a stable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(ErrorKind::syntax,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ordlat
