#pragma once

#include "sixj/classical.hpp"
#include "sixj/labels.hpp"

#include <cstdint>
#include <memory>

namespace sixj {

inline constexpr int kDefaultOracleCap = 12;

/// Brute-force 6j evaluation by explicit recoupling.
///
/// Builds the two coupled bases of Inv(V_a (x) V_b (x) V_c (x) V_d), one
/// through the channel e and one through f, from Clebsch-Gordan coefficients
/// (Condon-Shortley phases) and returns their overlap rescaled to the
/// Racah-Wigner 6j normalization. Coefficients are carried exactly as
/// sums of rational multiples of square roots of squarefree integers, so the
/// result is exact. Shares no code with `sixj()`.
///
/// Not thread-safe: it memoizes Clebsch-Gordan coefficients. Use one
/// instance per thread.
class SixjOracle {
 public:
  explicit SixjOracle(int label_cap = kDefaultOracleCap);
  ~SixjOracle();
  SixjOracle(SixjOracle&&) noexcept;
  SixjOracle& operator=(SixjOracle&&) noexcept;

  int label_cap() const noexcept { return label_cap_; }

  /// Throws kBoundExceeded when a label exceeds the cap.
  ExactSixJ operator()(const LabelSextet& s);

 private:
  struct Impl;
  int label_cap_;
  std::unique_ptr<Impl> impl_;
};

ExactSixJ sixj_oracle(const LabelSextet& s, int label_cap = kDefaultOracleCap);

}  // namespace sixj
