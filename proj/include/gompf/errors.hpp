#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gompf {

enum class ErrorKind {
  NotSymmetric,
  DimensionMismatch,
  NonTorsion,
  NotCharacteristic,
  CapExceeded,
  EvenCoefficient,
  BadEta,
  BadSign,
  IndexError,
  NotZSphere,
  MissingClasses,
  PresentationMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Violation of a mathematical precondition (as opposed to malformed input text).
/// `index()` names the offending component or entry when there is one.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& message,
              std::optional<std::size_t> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace gompf
