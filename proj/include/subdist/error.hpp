#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subdist {

enum class ErrorKind {
  RankDeficient,
  DimensionError,
  DimensionMismatch,
  AmbientMismatch,
  NotAProjection,
  SingularPencil,
  InsufficientAmbient,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Raised when an operation's precondition fails. The message names the
/// precondition; kind() identifies the class of failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace subdist
