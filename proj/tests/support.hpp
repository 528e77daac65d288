#pragma once

#include "sixj/geometry.hpp"
#include "sixj/labels.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace sixj::testing {

inline std::string data_path(const std::string& name) { return std::string(SIXJ_DATA_DIR) + "/" + name; }

inline LabelSextet random_admissible(std::mt19937_64& rng, int max_label) {
  std::uniform_int_distribution<int> label(0, max_label);
  for (;;) {
    const LabelSextet s(label(rng), label(rng), label(rng), label(rng), label(rng), label(rng));
    if (faces_admissible(s)) return s;
  }
}

inline Edges edges_from_points(const std::array<Eigen::Vector3d, 4>& p) {
  Edges e{};
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [u, v] = LabelSextet::kEdgeVertices[i];
    e[i] = (p[u] - p[v]).norm();
  }
  return e;
}

/// Edges of a random Euclidean tetrahedron, not too flat.
inline Edges random_euclidean(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (;;) {
    std::array<Eigen::Vector3d, 4> p;
    for (auto& x : p) x = Eigen::Vector3d(coord(rng), coord(rng), coord(rng));
    const double volume = std::abs((p[1] - p[0]).cross(p[2] - p[0]).dot(p[3] - p[0])) / 6.0;
    if (volume > 0.02) return edges_from_points(p);
  }
}

/// Edge lengths of a random spherical tetrahedron: four unit vectors in R^4
/// scattered around a common pole.
inline Edges random_spherical(std::mt19937_64& rng, double spread = 0.6) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::array<Eigen::Vector4d, 4> v;
  for (auto& x : v) x = (Eigen::Vector4d(0, 0, 0, 1) + spread * Eigen::Vector4d(g(rng), g(rng), g(rng), g(rng))).normalized();
  Edges l{};
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [a, b] = LabelSextet::kEdgeVertices[i];
    l[i] = std::acos(std::clamp(v[a].dot(v[b]), -1.0, 1.0));
  }
  return l;
}

/// Vertices in R^4 realizing a positive definite Gram matrix (rows of L).
inline Eigen::Matrix4d embed_s3(const Eigen::Matrix4d& gram) {
  return Eigen::Matrix4d(gram.llt().matrixL());
}

/// Interior dihedral angles measured from hyperplane normals of an explicit
/// embedding in R^4.
inline Edges embedded_dihedrals(const Eigen::Matrix4d& gram) {
  const Eigen::Matrix4d V = embed_s3(gram);
  std::array<Eigen::Vector4d, 4> n;
  for (int k = 0; k < 4; ++k) {
    Eigen::Matrix<double, 3, 4> face;
    for (int i = 0, j = 0; i < 4; ++i) {
      if (i != k) face.row(j++) = V.row(i);
    }
    Eigen::Vector4d normal = face.fullPivLu().kernel().col(0);
    if (normal.dot(V.row(k).transpose()) < 0) normal = -normal;
    n[k] = normal.normalized();
  }
  Edges out{};
  for (std::size_t e = 0; e < 6; ++e) {
    const auto [k, l] = opposite_vertices(e);
    out[e] = std::numbers::pi - std::acos(std::clamp(n[k].dot(n[l]), -1.0, 1.0));
  }
  return out;
}

struct MonteCarloVolume {
  double volume = 0.0;
  double sigma = 0.0;
};

/// Uniform samples on S^3, counted when they lie in the cone of the vertices.
inline MonteCarloVolume monte_carlo_volume(const Eigen::Matrix4d& gram, std::size_t samples, std::uint64_t seed) {
  const Eigen::Matrix4d V = embed_s3(gram);
  const Eigen::PartialPivLU<Eigen::Matrix4d> solve(V.transpose());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Eigen::Vector4d x(g(rng), g(rng), g(rng), g(rng));
    const Eigen::Vector4d c = solve.solve(x);
    if ((c.array() >= 0).all()) ++hits;
  }
  const double total = 2 * std::numbers::pi * std::numbers::pi;
  const double p = double(hits) / double(samples);
  return {total * p, total * std::sqrt(p * (1 - p) / double(samples))};
}

}  // namespace sixj::testing
