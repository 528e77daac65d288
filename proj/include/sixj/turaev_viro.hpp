#pragma once

#include "sixj/quantum.hpp"
#include "sixj/real.hpp"
#include "sixj/triangulation.hpp"

#include <cstdint>
#include <vector>

namespace sixj {

struct TvOptions {
  unsigned threads = 0;  // 0: one per hardware thread
  long precision_bits = kDefaultPrecisionBits;
  bool prune = true;     // skip states at the first inadmissible face
};

struct TvResult {
  QuantumReal value;
  double shadow = 0.0;            // same sum in double precision
  std::uint64_t nonzero_states = 0;

  /// True when the double shadow agrees with the multiprecision value.
  bool shadow_agrees(double tolerance = 1e-9) const;
};

/// Turaev-Viro invariant at q = exp(2 pi i / r):
///
///   Z = w^{-2V} sum_states prod_e (-1)^{s(e)} [s(e)+1]
///                           prod_faces (-1)^{(s(e1)+s(e2)+s(e3))/2}
///                           prod_t qsixj(s(t)),
///
/// with w^2 = sum_{n=0}^{r-2} [n+1]^2 and V the vertex count. The signs are
/// the Racah-Wigner normalization of the quantum 6j-symbol: with them the sum
/// is invariant under the 1-4 and 2-3 moves.
///
/// States are enumerated depth first with edges in descending degree order;
/// the tree is split on the first edge's label and the branch sums are added
/// in label order, so the result does not depend on the thread count or on
/// pruning.
TvResult tv_invariant(const Triangulation& t, RootOfUnityLevel level, const TvOptions& options = {});

struct TvRow {
  int r = 0;
  TvResult result;
};

/// One row per r, sorted by r.
std::vector<TvRow> tv_sweep(const Triangulation& t, std::vector<int> r_list, const TvOptions& options = {});

}  // namespace sixj
