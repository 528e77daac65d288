#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sixj {

/// Failure categories raised by the library. The CLI maps each category
/// onto an exit code, so new kinds must be added to `cli::exit_code_for`.
enum class ErrorKind {
  kInvalidArgument,     // malformed input outside any domain contract
  kBoundExceeded,       // oracle label cap
  kLabelOutOfRange,     // quantum label above r-2
  kFaceViolation,       // a face triple breaks the triangle inequality
  kClassification,      // operation needs a Euclidean tetrahedron
  kNonRealizable,       // spherical Gram matrix not positive definite
  kPathLeftRegion,      // Schlafli path lost positive-definiteness
  kRegime,              // asymptotic formula applied in the wrong regime
  kIntegrality,         // k * fraction not an integer
  kAllZeroWindow,       // no nonzero values to fit
  kParse,               // triangulation text does not parse
  kNonClosed,           // a face is not shared by exactly two tetrahedra
  kEulerCharacteristic, // V - E + F - T != 0
  kInvalidTriangulation,
  kIndex,
  kFaceNotFlippable,
  kIo,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sixj
