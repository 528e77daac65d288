#include "sixj/quantum.hpp"

#include "sixj/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace sixj {
namespace {

constexpr long kGuardBits = 32;

void check_label(int label, RootOfUnityLevel level) {
  if (label < 0 || label > level.max_label()) {
    throw Error(ErrorKind::kLabelOutOfRange,
                "label " + std::to_string(label) + " outside 0.." + std::to_string(level.max_label()) +
                    " at r=" + std::to_string(level.r()));
  }
}

Real rounded(const Real& x, long bits) {
  Real out(bits);
  mpfr_set(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

RootOfUnityLevel::RootOfUnityLevel(int r) : r_(r) {
  if (r < 3) throw Error(ErrorKind::kInvalidArgument, "root of unity order r must be >= 3");
}

QuantumFactorials::QuantumFactorials(RootOfUnityLevel level, long precision_bits)
    : r_(level.r()), bits_(precision_bits), zero_(precision_bits) {
  const Real angle = pi(bits_) / Real(static_cast<long>(r_), bits_);
  const Real base = sin(angle);
  qint_.reserve(static_cast<std::size_t>(r_) + 1);
  qint_.emplace_back(bits_);
  for (long n = 1; n < r_; ++n) qint_.push_back(sin(angle * n) / base);
  qint_.emplace_back(bits_);  // [r] = 0 exactly

  factorial_.reserve(static_cast<std::size_t>(r_));
  factorial_.emplace_back(1L, bits_);
  for (int n = 1; n < r_; ++n) factorial_.push_back(factorial_.back() * qint_[static_cast<std::size_t>(n)]);
}

const Real& QuantumFactorials::factorial(int n) const {
  if (n < 0) throw std::out_of_range("negative quantum factorial");
  if (n >= r_) return zero_;
  return factorial_[static_cast<std::size_t>(n)];
}

std::shared_ptr<const QuantumFactorials> QuantumFactorials::get(RootOfUnityLevel level,
                                                                long precision_bits) {
  static std::mutex mutex;
  static std::map<std::pair<int, long>, std::shared_ptr<const QuantumFactorials>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{level.r(), precision_bits}];
  if (!slot) slot = std::make_shared<const QuantumFactorials>(level, precision_bits);
  return slot;
}

QuantumReal qint(long n, RootOfUnityLevel level, long precision_bits) {
  if (n % level.r() == 0) return Real(precision_bits);
  const long bits = precision_bits + kGuardBits;
  const Real angle = pi(bits) / Real(static_cast<long>(level.r()), bits);
  return rounded(sin(angle * n) / sin(angle), precision_bits);
}

bool q_admissible(int a, int b, int c, RootOfUnityLevel level) {
  check_label(a, level);
  check_label(b, level);
  check_label(c, level);
  return admissible(a, b, c) && a + b + c <= 2 * level.level();
}

QuantumReal qsixj(const LabelSextet& s, RootOfUnityLevel level, long precision_bits) {
  for (int v : s.labels()) check_label(v, level);
  for (const auto& t : s.face_triples()) {
    if (!q_admissible(t[0], t[1], t[2], level)) return Real(precision_bits);
  }

  const long bits = precision_bits + kGuardBits;
  const auto table = QuantumFactorials::get(level, bits);
  auto F = [&table](long n) -> const Real& { return table->factorial(static_cast<int>(n)); };

  const auto faces = s.face_triples();
  std::array<long, 4> alpha{};
  for (std::size_t i = 0; i < 4; ++i) alpha[i] = (faces[i][0] + faces[i][1] + faces[i][2]) / 2;
  const std::array<long, 3> beta{(s.a() + s.b() + s.c() + s.d()) / 2,
                                 (s.a() + s.d() + s.e() + s.f()) / 2,
                                 (s.b() + s.c() + s.e() + s.f()) / 2};
  const long zmin = *std::max_element(alpha.begin(), alpha.end());
  const long zmax = std::min<long>(*std::min_element(beta.begin(), beta.end()), level.r() - 2);

  Real triangles(1L, bits);
  for (const auto& t : faces) {
    const long x = t[0], y = t[1], z = t[2];
    triangles *= F((-x + y + z) / 2) * F((x - y + z) / 2) * F((x + y - z) / 2);
    triangles /= F((x + y + z) / 2 + 1);
  }

  Real sum(bits);
  Real largest(bits);
  for (long z = zmin; z <= zmax; ++z) {
    Real term = F(z + 1);
    for (long a : alpha) term /= F(z - a);
    for (long b : beta) term /= F(b - z);
    if (abs(term) > largest) largest = abs(term);
    if (z % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  // A sum that cancels below the requested precision is zero: the guard
  // bits keep genuine values well above this floor.
  Real floor = largest;
  mpfr_div_2si(floor.get(), floor.get(), precision_bits, MPFR_RNDN);
  if (abs(sum) <= floor) return Real(precision_bits);
  return rounded(sqrt(triangles) * sum, precision_bits);
}

QuantumReal q_pentagon_residual(const PentagonLabels& L, RootOfUnityLevel level,
                                long precision_bits) {
  for (int v : {L.a, L.b, L.c, L.d, L.e, L.f, L.p, L.q, L.r}) check_label(v, level);
  const long bits = precision_bits + kGuardBits;
  const auto W = [&](int j1, int j2, int j3, int j4, int j5, int j6) {
    return qsixj(LabelSextet::from_wigner(j1, j2, j3, j4, j5, j6), level, bits);
  };
  const auto table = QuantumFactorials::get(level, bits);

  Real lhs(bits);
  for (int x = 0; x <= level.max_label(); ++x) {
    Real t = W(L.a, L.b, x, L.c, L.d, L.p);
    if (t.is_zero()) continue;
    t *= W(L.c, L.d, x, L.e, L.f, L.q);
    if (t.is_zero()) continue;
    t *= W(L.e, L.f, x, L.b, L.a, L.r);
    if (t.is_zero()) continue;
    const int phase = L.sum() + x;
    if (phase % 2 != 0) throw std::logic_error("nonzero pentagon term with half-integer phase");
    t *= table->qint(x + 1);
    if ((phase / 2) % 2 == 0) {
      lhs += t;
    } else {
      lhs -= t;
    }
  }
  const Real rhs = W(L.p, L.q, L.r, L.e, L.a, L.d) * W(L.p, L.q, L.r, L.f, L.b, L.c);
  return rounded(lhs - rhs, precision_bits);
}

}  // namespace sixj
