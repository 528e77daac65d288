#include "sixj/real.hpp"

#include "sixj/error.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sixj {

namespace {

mpfr_prec_t checked_precision(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1 << 20) {
    throw Error(ErrorKind::kInvalidArgument,
                "precision must be between 2 and 2^20 bits, got " + std::to_string(bits));
  }
  return static_cast<mpfr_prec_t>(bits);
}

// Raise `target` to at least the precision of `other`, preserving its value.
void widen_to(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) {
    mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
  }
}

}  // namespace

Real::Real(long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_q(value_, value.backend().data(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int digits) const {
  digits = std::max(digits, 1);
  const int size = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
  std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Re", digits - 1, value_);
  return std::string(buffer.data(), static_cast<std::size_t>(size));
}

std::string Real::to_string() const { return to_string(decimal_digits_for(precision_bits())); }

Real& Real::operator+=(const Real& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real sqrt(const Real& x) {
  Real out(x.precision_bits());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real abs(const Real& x) {
  Real out(x.precision_bits());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sin(const Real& x) {
  Real out(x.precision_bits());
  mpfr_sin(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real log(const Real& x) {
  Real out(x.precision_bits());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pi(long precision_bits) {
  Real out(precision_bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

int decimal_digits_for(long bits) noexcept {
  return static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0))) + 1;
}

}  // namespace sixj
