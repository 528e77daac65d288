#include "sixj/geometry.hpp"

#include "sixj/error.hpp"
#include "sixj/labels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sixj {
namespace {

Eigen::Matrix4d distance_matrix(const Edges& edges) {
  Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [u, v] = LabelSextet::kEdgeVertices[i];
    d(u, v) = d(v, u) = edges[i];
  }
  return d;
}

void check_edges(const Edges& edges) {
  for (double x : edges) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw Error(ErrorKind::kInvalidArgument, "edge lengths must be positive and finite");
    }
  }
  for (const auto& face : LabelSextet::kFaces) {
    const double x = edges[face[0]], y = edges[face[1]], z = edges[face[2]];
    if (x > y + z || y > x + z || z > x + y) {
      throw Error(ErrorKind::kFaceViolation, "face (" + std::to_string(x) + ", " + std::to_string(y) +
                                                 ", " + std::to_string(z) +
                                                 ") violates the triangle inequality");
    }
  }
}

double max_edge(const Edges& edges) { return *std::max_element(edges.begin(), edges.end()); }

}  // namespace

std::array<int, 2> opposite_vertices(std::size_t edge) {
  const auto [u, v] = LabelSextet::kEdgeVertices[edge];
  std::array<int, 2> out{};
  for (int w = 0, j = 0; w < 4; ++w) {
    if (w != u && w != v) out[static_cast<std::size_t>(j++)] = w;
  }
  return out;
}

std::string_view to_string(TetKind kind) {
  switch (kind) {
    case TetKind::kEuclidean: return "Euclidean";
    case TetKind::kMinkowskian: return "Minkowskian";
    case TetKind::kDegenerate: return "Degenerate";
  }
  return "unknown";
}

double clamped_acos(double cosine) {
  if (std::abs(cosine) > 1.0 + kClampTolerance || std::isnan(cosine)) {
    throw Error(ErrorKind::kClassification, "angle cosine " + std::to_string(cosine) + " out of range");
  }
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

Edges TetGeometry::interior_dihedrals() const {
  Edges out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = std::numbers::pi - exterior_dihedrals[i];
  return out;
}

double cayley_menger(const Edges& edges) {
  check_edges(edges);
  const Eigen::Matrix4d d = distance_matrix(edges);
  // Scale to unit max edge so the determinant is well conditioned.
  const double s = max_edge(edges);
  Eigen::Matrix<double, 5, 5> m;
  m.setOnes();
  m(0, 0) = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i + 1, j + 1) = (d(i, j) / s) * (d(i, j) / s);
  }
  return m.fullPivLu().determinant() * std::pow(s, 6);
}

TetKind classify(const Edges& edges, double relative_tolerance) {
  const double det = cayley_menger(edges);
  if (std::abs(det) < relative_tolerance * std::pow(max_edge(edges), 6)) return TetKind::kDegenerate;
  return det > 0 ? TetKind::kEuclidean : TetKind::kMinkowskian;
}

std::array<Eigen::Vector3d, 4> euclid_embed(const Edges& edges) {
  const TetKind kind = classify(edges);
  if (kind != TetKind::kEuclidean) {
    throw Error(ErrorKind::kClassification,
                "tetrahedron is " + std::string(to_string(kind)) + ", not Euclidean");
  }
  const Eigen::Matrix4d d = distance_matrix(edges);
  std::array<Eigen::Vector3d, 4> p;
  p[0] = Eigen::Vector3d::Zero();
  p[1] = Eigen::Vector3d(d(0, 1), 0.0, 0.0);

  const double x2 = (d(0, 2) * d(0, 2) - d(1, 2) * d(1, 2) + d(0, 1) * d(0, 1)) / (2.0 * d(0, 1));
  const double y2 = std::sqrt(std::max(0.0, d(0, 2) * d(0, 2) - x2 * x2));
  p[2] = Eigen::Vector3d(x2, y2, 0.0);

  const double x3 = (d(0, 3) * d(0, 3) - d(1, 3) * d(1, 3) + d(0, 1) * d(0, 1)) / (2.0 * d(0, 1));
  const double y3 =
      (d(0, 3) * d(0, 3) - d(2, 3) * d(2, 3) + x2 * x2 + y2 * y2 - 2.0 * x2 * x3) / (2.0 * y2);
  const double z3 = std::sqrt(std::max(0.0, d(0, 3) * d(0, 3) - x3 * x3 - y3 * y3));
  p[3] = Eigen::Vector3d(x3, y3, z3);
  return p;
}

double euclid_volume(const Edges& edges) {
  const TetGeometry g = analyze(edges);
  if (g.kind != TetKind::kEuclidean) {
    throw Error(ErrorKind::kClassification, "volume is defined only for Euclidean tetrahedra");
  }
  return g.volume;
}

Edges exterior_dihedrals(const Edges& edges) {
  const auto p = euclid_embed(edges);
  // Outward unit normal of the face opposite each vertex.
  std::array<Eigen::Vector3d, 4> n;
  for (int k = 0; k < 4; ++k) {
    std::array<int, 3> f{};
    for (int i = 0, j = 0; i < 4; ++i) {
      if (i != k) f[j++] = i;
    }
    Eigen::Vector3d v = (p[f[1]] - p[f[0]]).cross(p[f[2]] - p[f[0]]);
    if (v.dot(p[k] - p[f[0]]) > 0) v = -v;
    n[k] = v.normalized();
  }
  Edges out{};
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [k, l] = opposite_vertices(i);
    out[i] = clamped_acos(n[k].dot(n[l]));
  }
  return out;
}

Edges interior_dihedrals(const Edges& edges) {
  Edges out = exterior_dihedrals(edges);
  for (double& x : out) x = std::numbers::pi - x;
  return out;
}

TetGeometry analyze(const Edges& edges, double relative_tolerance) {
  TetGeometry g;
  g.edges = edges;
  g.cayley_det = cayley_menger(edges);
  if (std::abs(g.cayley_det) < relative_tolerance * std::pow(max_edge(edges), 6)) {
    g.kind = TetKind::kDegenerate;
  } else if (g.cayley_det > 0) {
    g.kind = TetKind::kEuclidean;
    g.volume = std::sqrt(g.cayley_det / 288.0);
    g.exterior_dihedrals = exterior_dihedrals(edges);
  } else {
    g.kind = TetKind::kMinkowskian;
  }
  return g;
}

}  // namespace sixj
