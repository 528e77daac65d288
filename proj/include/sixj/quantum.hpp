#pragma once

#include "sixj/labels.hpp"
#include "sixj/real.hpp"

#include <memory>
#include <vector>

namespace sixj {

using QuantumReal = Real;

/// Order r of the root of unity q = exp(2 pi i / r); level k = r - 2.
/// Allowed labels are 0, 1, ..., r - 2.
class RootOfUnityLevel {
 public:
  explicit RootOfUnityLevel(int r);

  int r() const noexcept { return r_; }
  int level() const noexcept { return r_ - 2; }
  int max_label() const noexcept { return r_ - 2; }

  friend bool operator==(RootOfUnityLevel, RootOfUnityLevel) = default;

 private:
  int r_;
};

/// Quantum integers [1..r-1] and quantum factorials [0]!..[r-1]! at one
/// (r, precision), shared read-only between threads once built.
class QuantumFactorials {
 public:
  static std::shared_ptr<const QuantumFactorials> get(RootOfUnityLevel level, long precision_bits);

  QuantumFactorials(RootOfUnityLevel level, long precision_bits);

  /// [n] for 0 <= n <= r.
  const Real& qint(int n) const { return qint_.at(static_cast<std::size_t>(n)); }
  /// [n]!, exactly zero once n >= r.
  const Real& factorial(int n) const;

  long precision_bits() const noexcept { return bits_; }

 private:
  int r_;
  long bits_;
  std::vector<Real> qint_;
  std::vector<Real> factorial_;
  Real zero_;
};

/// [n] = sin(n pi / r) / sin(pi / r); exactly zero when r divides n.
QuantumReal qint(long n, RootOfUnityLevel level, long precision_bits = kDefaultPrecisionBits);

/// Admissibility plus the level bound a + b + c <= 2(r - 2).
/// Throws kLabelOutOfRange for labels above r - 2.
bool q_admissible(int a, int b, int c, RootOfUnityLevel level);

/// Quantum 6j-symbol at q = exp(2 pi i / r), Racah-Wigner normalized.
///
/// Kirillov-Reshetikhin single sum with every factorial replaced by its
/// quantum factorial; reduces to `sixj` as r grows. Zero unless all four
/// face triples are q-admissible.
QuantumReal qsixj(const LabelSextet& s, RootOfUnityLevel level,
                  long precision_bits = kDefaultPrecisionBits);

/// LHS - RHS of the quantum Biedenharn-Elliott identity, with quantum
/// dimensions [x+1] in place of x+1. Absolute, not normalized.
QuantumReal q_pentagon_residual(const PentagonLabels& labels, RootOfUnityLevel level,
                                long precision_bits = kDefaultPrecisionBits);

}  // namespace sixj
