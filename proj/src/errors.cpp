#include "gompf/errors.hpp"

namespace gompf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonTorsion: return "NonTorsion";
    case ErrorKind::NotCharacteristic: return "NotCharacteristic";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::EvenCoefficient: return "EvenCoefficient";
    case ErrorKind::BadEta: return "BadEta";
    case ErrorKind::BadSign: return "BadSign";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::NotZSphere: return "NotZSphere";
    case ErrorKind::MissingClasses: return "MissingClasses";
    case ErrorKind::PresentationMismatch: return "PresentationMismatch";
  }
  return "Unknown";
}

DomainError::DomainError(ErrorKind kind, const std::string& message,
                         std::optional<std::size_t> index)
    : std::runtime_error(message), kind_(kind), index_(index) {}

}  // namespace gompf
