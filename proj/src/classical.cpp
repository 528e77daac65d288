#include "sixj/classical.hpp"

#include "sixj/error.hpp"
#include "sixj/factorial_cache.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace sixj {

ExactSixJ::ExactSixJ(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {
  if (sign_ < -1 || sign_ > 1) {
    throw Error(ErrorKind::kInvalidArgument, "sign must be -1, 0 or +1");
  }
  if (radicand_ < 0) throw Error(ErrorKind::kInvalidArgument, "radicand must be nonnegative");
  if ((sign_ == 0) != (radicand_ == 0)) {
    throw Error(ErrorKind::kInvalidArgument, "sign is zero iff radicand is zero");
  }
}

ExactSixJ ExactSixJ::from_rational(const Rational& v) {
  if (v == 0) return {};
  return ExactSixJ(v > 0 ? 1 : -1, v * v);
}

Real ExactSixJ::to_real(long precision_bits) const {
  Real out = sqrt(Real(radicand_, precision_bits + 8));
  if (sign_ < 0) out = -out;
  Real rounded(precision_bits);
  mpfr_set(rounded.get(), out.get(), MPFR_RNDN);
  return rounded;
}

double ExactSixJ::to_double() const { return to_real(64).to_double(); }

Real ExactSixJ::log_abs(long precision_bits) const {
  if (is_zero()) throw Error(ErrorKind::kInvalidArgument, "log of a zero 6j-symbol");
  Real out = log(Real(radicand_, precision_bits));
  mpfr_div_2ui(out.get(), out.get(), 1, MPFR_RNDN);
  return out;
}

std::string ExactSixJ::to_string() const {
  if (is_zero()) return "0";
  std::string out = sign_ < 0 ? "-sqrt(" : "sqrt(";
  out += boost::multiprecision::numerator(radicand_).str();
  const Integer den = boost::multiprecision::denominator(radicand_);
  if (den != 1) out += "/" + den.str();
  return out + ")";
}

ExactSixJ operator*(const ExactSixJ& x, const ExactSixJ& y) {
  if (x.is_zero() || y.is_zero()) return {};
  return ExactSixJ(x.sign_ * y.sign_, x.radicand_ * y.radicand_);
}

std::ostream& operator<<(std::ostream& os, const ExactSixJ& v) { return os << v.to_string(); }

std::optional<Rational> exact_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  const Integer num = boost::multiprecision::numerator(v);
  const Integer den = boost::multiprecision::denominator(v);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

ExactSixJ sixj(const LabelSextet& s) {
  if (!faces_admissible(s)) return {};

  const auto faces = s.face_triples();
  std::array<long, 4> alpha{};
  for (std::size_t i = 0; i < 4; ++i) alpha[i] = (faces[i][0] + faces[i][1] + faces[i][2]) / 2;
  const std::array<long, 3> beta{(s.a() + s.b() + s.c() + s.d()) / 2,
                                 (s.a() + s.d() + s.e() + s.f()) / 2,
                                 (s.b() + s.c() + s.e() + s.f()) / 2};

  const long zmin = *std::max_element(alpha.begin(), alpha.end());
  const long zmax = *std::min_element(beta.begin(), beta.end());
  if (zmin > zmax) return {};

  const auto table = FactorialCache::shared().upto(static_cast<std::size_t>(zmax + 1));
  const auto& fact = *table;
  auto F = [&fact](long n) -> const Integer& { return fact[static_cast<std::size_t>(n)]; };

  // Product of the four squared triangle coefficients.
  Rational triangles(1);
  for (const auto& t : faces) {
    const long x = t[0], y = t[1], z = t[2];
    triangles *= Rational(F((-x + y + z) / 2) * F((x - y + z) / 2) * F((x + y - z) / 2),
                          F((x + y + z) / 2 + 1));
  }

  // Racah sum over a common denominator: every term is scaled by
  //   scale = prod_i (zmax - alpha_i)! * prod_j (beta_j - zmin)!
  // which turns each ratio of factorials into an integer.
  Integer scale(1);
  for (long a : alpha) scale *= F(zmax - a);
  for (long b : beta) scale *= F(b - zmin);

  Integer sum(0);
  for (long z = zmin; z <= zmax; ++z) {
    Integer term = F(z + 1);
    for (long a : alpha) term *= F(zmax - a) / F(z - a);
    for (long b : beta) term *= F(b - zmin) / F(b - z);
    if (z % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (sum == 0) return {};

  const int sign = sum > 0 ? 1 : -1;
  const Rational ratio(sum, scale);
  return ExactSixJ(sign, triangles * ratio * ratio);
}

Rational pentagon_residual(const PentagonLabels& L) {
  const auto W = [](int j1, int j2, int j3, int j4, int j5, int j6) {
    return sixj(LabelSextet::from_wigner(j1, j2, j3, j4, j5, j6));
  };

  // Terms are collected as (coefficient sign, value); the right-hand side
  // enters with a minus sign.
  std::vector<ExactSixJ> terms;
  const int xmax = std::min({L.a + L.b, L.c + L.d, L.e + L.f});
  for (int x = 0; x <= xmax; ++x) {
    ExactSixJ t = W(L.a, L.b, x, L.c, L.d, L.p) * W(L.c, L.d, x, L.e, L.f, L.q) *
                  W(L.e, L.f, x, L.b, L.a, L.r);
    if (t.is_zero()) continue;
    const int phase = L.sum() + x;
    if (phase % 2 != 0) {
      throw std::logic_error("nonzero pentagon term with half-integer phase");
    }
    const int sign = (phase / 2) % 2 == 0 ? t.sign() : -t.sign();
    terms.emplace_back(sign, t.radicand() * (x + 1) * (x + 1));
  }
  const ExactSixJ rhs = W(L.p, L.q, L.r, L.e, L.a, L.d) * W(L.p, L.q, L.r, L.f, L.b, L.c);
  if (!rhs.is_zero()) terms.emplace_back(-rhs.sign(), rhs.radicand());
  if (terms.empty()) return Rational(0);

  const Rational& reference = rhs.is_zero() ? terms.front().radicand() : rhs.radicand();
  Rational residual(0);
  for (const auto& t : terms) {
    const auto root = exact_sqrt(t.radicand() / reference);
    if (!root) throw std::logic_error("pentagon terms are incommensurable");
    residual += t.sign() * *root;
  }
  return residual;
}

}  // namespace sixj
