#include "sixj/labels.hpp"

#include "sixj/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sixj {

LabelSextet::LabelSextet(int a, int b, int c, int d, int e, int f)
    : LabelSextet(std::array<int, 6>{a, b, c, d, e, f}) {}

LabelSextet::LabelSextet(const std::array<int, 6>& labels) : labels_(labels) {
  for (int v : labels_) {
    if (v < 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "labels must be nonnegative, got " + std::to_string(v));
    }
  }
}

LabelSextet LabelSextet::from_wigner(int j1, int j2, int j3, int j4, int j5, int j6) {
  return LabelSextet(j1, j2, j5, j4, j3, j6);
}

int LabelSextet::edge_index(int u, int v) {
  if (u > v) std::swap(u, v);
  for (int i = 0; i < 6; ++i) {
    auto [x, y] = kEdgeVertices[static_cast<std::size_t>(i)];
    if (std::min(x, y) == u && std::max(x, y) == v) return i;
  }
  throw Error(ErrorKind::kInvalidArgument, "not a tetrahedron edge");
}

std::array<std::array<int, 3>, 4> LabelSextet::face_triples() const {
  std::array<std::array<int, 3>, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      out[i][j] = labels_[static_cast<std::size_t>(kFaces[i][j])];
    }
  }
  return out;
}

int LabelSextet::max_label() const { return *std::max_element(labels_.begin(), labels_.end()); }

LabelSextet LabelSextet::scaled(int k) const {
  std::array<int, 6> out = labels_;
  for (int& v : out) v *= k;
  return LabelSextet(out);
}

std::ostream& operator<<(std::ostream& os, const LabelSextet& s) {
  os << '(';
  for (std::size_t i = 0; i < 6; ++i) os << (i ? "," : "") << s[i];
  return os << ')';
}

bool faces_admissible(const LabelSextet& s) noexcept {
  for (const auto& t : s.face_triples()) {
    if (!admissible(t[0], t[1], t[2])) return false;
  }
  return true;
}

LabelSextet permute_vertices(const LabelSextet& s, const std::array<int, 4>& perm) {
  std::array<int, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) {
    auto [u, v] = LabelSextet::kEdgeVertices[i];
    out[static_cast<std::size_t>(LabelSextet::edge_index(perm[static_cast<std::size_t>(u)],
                                                         perm[static_cast<std::size_t>(v)]))] =
        s[i];
  }
  return LabelSextet(out);
}

std::vector<LabelSextet> symmetry_orbit(const LabelSextet& s) {
  std::array<int, 4> perm{};
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<LabelSextet> orbit;
  orbit.reserve(24);
  do {
    orbit.push_back(permute_vertices(s, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

std::array<std::array<int, 3>, 7> PentagonLabels::outer_triples() const {
  return {{{p, q, r}, {p, a, d}, {e, q, d}, {e, a, r}, {p, b, c}, {f, q, c}, {f, b, r}}};
}

}  // namespace sixj
