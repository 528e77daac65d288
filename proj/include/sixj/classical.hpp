#pragma once

#include "sixj/labels.hpp"
#include "sixj/real.hpp"

#include <optional>
#include <string>

namespace sixj {

/// Exact real number of the form sign * sqrt(radicand), radicand >= 0 rational.
///
/// Every classical 6j-symbol has this form. The value is never rounded;
/// floating renderings are produced on demand.
class ExactSixJ {
 public:
  ExactSixJ() = default;
  ExactSixJ(int sign, Rational radicand);

  /// sign(v) * sqrt(v^2).
  static ExactSixJ from_rational(const Rational& v);

  int sign() const noexcept { return sign_; }
  const Rational& radicand() const noexcept { return radicand_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  Real to_real(long precision_bits = kDefaultPrecisionBits) const;
  double to_double() const;

  /// log|value|; the value must be nonzero.
  Real log_abs(long precision_bits = kDefaultPrecisionBits) const;

  /// "0", "sqrt(p/q)" or "-sqrt(p/q)" (q omitted when it is 1).
  std::string to_string() const;

  friend ExactSixJ operator*(const ExactSixJ& x, const ExactSixJ& y);
  friend bool operator==(const ExactSixJ&, const ExactSixJ&) = default;

 private:
  int sign_ = 0;
  Rational radicand_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactSixJ& v);

/// Square root of a rational when it is itself rational.
std::optional<Rational> exact_sqrt(const Rational& v);

/// Classical SU(2) 6j-symbol in the Racah-Wigner normalization.
///
/// Uses Racah's single-sum formula over exact integers from the shared
/// factorial cache. Returns zero when any face triple is not admissible.
ExactSixJ sixj(const LabelSextet& s);

/// LHS - RHS of the Biedenharn-Elliott identity for the nine labels.
///
/// Every term on both sides is sign * sqrt(K * rational^2) for a common K, so
/// each is divided by sqrt of the first nonzero term's radicand (the
/// right-hand side when it is nonzero) before summing. The result is an
/// exact rational that vanishes iff the identity holds. Throws
/// std::logic_error if two terms turn out to be incommensurable.
Rational pentagon_residual(const PentagonLabels& labels);

}  // namespace sixj
