#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <ostream>
#include <vector>

namespace sixj {

/// Six edge labels of a 6j-symbol (labels are twice the spin).
///
/// Tetrahedral incidence, with the tetrahedron's vertices numbered 0..3:
///
///   index  label  vertices
///     0      a     (0,2)
///     1      b     (1,2)
///     2      c     (0,3)
///     3      d     (1,3)
///     4      e     (0,1)
///     5      f     (2,3)
///
/// Face triples are {a,b,e}, {c,d,e}, {a,c,f}, {b,d,f}; opposite edge pairs
/// are (a,d), (b,c), (e,f). In Wigner's notation the symbol is
/// {a/2 b/2 e/2; d/2 c/2 f/2}.
class LabelSextet {
 public:
  static constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
      {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 1}, {2, 3}}};
  static constexpr std::array<std::array<int, 3>, 4> kFaces{
      {{0, 1, 4}, {2, 3, 4}, {0, 2, 5}, {1, 3, 5}}};

  constexpr LabelSextet() = default;
  LabelSextet(int a, int b, int c, int d, int e, int f);
  explicit LabelSextet(const std::array<int, 6>& labels);

  /// Builds the sextet for Wigner's {j1 j2 j3; j4 j5 j6}, given doubled spins.
  static LabelSextet from_wigner(int j1, int j2, int j3, int j4, int j5, int j6);

  /// Index into the sextet of the edge joining tetrahedron vertices u and v.
  static int edge_index(int u, int v);

  int a() const noexcept { return labels_[0]; }
  int b() const noexcept { return labels_[1]; }
  int c() const noexcept { return labels_[2]; }
  int d() const noexcept { return labels_[3]; }
  int e() const noexcept { return labels_[4]; }
  int f() const noexcept { return labels_[5]; }

  int operator[](std::size_t i) const { return labels_[i]; }
  const std::array<int, 6>& labels() const noexcept { return labels_; }

  std::array<std::array<int, 3>, 4> face_triples() const;
  int max_label() const;

  /// Multiplies every label by k.
  LabelSextet scaled(int k) const;

  friend auto operator<=>(const LabelSextet&, const LabelSextet&) = default;

 private:
  std::array<int, 6> labels_{};
};

std::ostream& operator<<(std::ostream& os, const LabelSextet& s);

/// Triangle inequalities plus even sum: the trilinear invariant space of
/// V_a (x) V_b (x) V_c is one-dimensional exactly when this holds.
constexpr bool admissible(long a, long b, long c) noexcept {
  return a >= 0 && b >= 0 && c >= 0 && a <= b + c && b <= c + a && c <= a + b &&
         (a + b + c) % 2 == 0;
}

bool faces_admissible(const LabelSextet& s) noexcept;

/// All relabelings produced by permuting the four tetrahedron vertices,
/// sorted and deduplicated (between 1 and 24 members).
std::vector<LabelSextet> symmetry_orbit(const LabelSextet& s);

/// Applies the vertex permutation `perm` (vertex i moves to perm[i]).
LabelSextet permute_vertices(const LabelSextet& s, const std::array<int, 4>& perm);

/// Nine labels for the Biedenharn-Elliott identity
///
///   sum_x (-1)^{(S+x)/2} (x+1) {a b x; c d p}{c d x; e f q}{e f x; b a r}
///       = {p q r; e a d}{p q r; f b c}
///
/// written in Wigner's notation with doubled spins and S = a+b+...+r.
struct PentagonLabels {
  int a = 0, b = 0, c = 0, d = 0, e = 0, f = 0, p = 0, q = 0, r = 0;

  /// The seven triples that the right-hand side needs to be admissible.
  std::array<std::array<int, 3>, 7> outer_triples() const;
  int sum() const noexcept { return a + b + c + d + e + f + p + q + r; }
};

}  // namespace sixj
