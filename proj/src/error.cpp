#include "subdist/error.hpp"

namespace subdist {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotAProjection: return "NotAProjection";
    case ErrorKind::SingularPencil: return "SingularPencil";
    case ErrorKind::InsufficientAmbient: return "InsufficientAmbient";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace subdist
