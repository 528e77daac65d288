#include "sixj/error.hpp"

namespace sixj {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid argument";
    case ErrorKind::kBoundExceeded: return "bound exceeded";
    case ErrorKind::kLabelOutOfRange: return "label out of range";
    case ErrorKind::kFaceViolation: return "face violation";
    case ErrorKind::kClassification: return "classification";
    case ErrorKind::kNonRealizable: return "non-realizable";
    case ErrorKind::kPathLeftRegion: return "path left realizable region";
    case ErrorKind::kRegime: return "regime";
    case ErrorKind::kIntegrality: return "integrality";
    case ErrorKind::kAllZeroWindow: return "all-zero window";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kNonClosed: return "non-closed complex";
    case ErrorKind::kEulerCharacteristic: return "Euler characteristic";
    case ErrorKind::kInvalidTriangulation: return "invalid triangulation";
    case ErrorKind::kIndex: return "index";
    case ErrorKind::kFaceNotFlippable: return "face not flippable";
    case ErrorKind::kIo: return "I/O";
  }
  return "unknown";
}

}  // namespace sixj
