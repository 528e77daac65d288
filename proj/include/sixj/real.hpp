#pragma once

#include <mpfr.h>

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>

namespace sixj {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline constexpr long kDefaultPrecisionBits = 128;

/// Arbitrary-precision binary float that carries its own working precision.
///
/// A thin owning wrapper over `mpfr_t`. Binary operations produce a result
/// at the larger of the two operand precisions, so a computation never
/// drops below the precision it was seeded with. All rounding is to nearest.
class Real {
 public:
  explicit Real(long precision_bits = kDefaultPrecisionBits);
  Real(long value, long precision_bits);
  Real(double value, long precision_bits);
  Real(const Rational& value, long precision_bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision_bits() const noexcept { return static_cast<long>(mpfr_get_prec(value_)); }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;

  /// Enough significant digits to round-trip at this precision.
  std::string to_string() const;

  int sign() const noexcept { return mpfr_sgn(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);

  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }

  friend bool operator==(const Real& a, const Real& b) noexcept {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept;

 private:
  mpfr_t value_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
Real sin(const Real& x);
Real log(const Real& x);
Real pi(long precision_bits);

/// Number of significant decimal digits that round-trip `bits` binary digits.
int decimal_digits_for(long bits) noexcept;

}  // namespace sixj
