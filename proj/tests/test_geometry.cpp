#include "sixj/error.hpp"
#include "sixj/geometry.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sixj;

TEST_CASE("regular unit tetrahedron") {
  const Edges unit{1, 1, 1, 1, 1, 1};
  CHECK(std::abs(cayley_menger(unit) - 4.0) < 1e-12);
  const TetGeometry g = analyze(unit);
  CHECK(g.kind == TetKind::kEuclidean);
  CHECK(g.volume == doctest::Approx(1.0 / (6.0 * std::sqrt(2.0))).epsilon(1e-14));
  for (double t : g.exterior_dihedrals) {
    CHECK(t == doctest::Approx(std::numbers::pi - std::acos(1.0 / 3.0)).epsilon(1e-14));
  }
  for (double t : g.interior_dihedrals()) CHECK(t == doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("determinant is 288 V^2 on random tetrahedra") {
  std::mt19937_64 rng(0x5eed21);
  for (int trial = 0; trial < 200; ++trial) {
    const Edges e = testing::random_euclidean(rng);
    const double v = euclid_volume(e);
    CHECK(cayley_menger(e) == doctest::Approx(288 * v * v).epsilon(1e-9));
  }
}

TEST_CASE("flat configurations are degenerate") {
  // four coplanar points: unit square
  const double s2 = std::sqrt(2.0);
  const Edges square{s2, 1, 1, s2, 1, 1};
  CHECK(classify(square) == TetKind::kDegenerate);
  CHECK(analyze(square).kind == TetKind::kDegenerate);
  CHECK_THROWS_AS(euclid_embed(square), Error);
}

TEST_CASE("threshold between Euclidean and Minkowskian") {
  const double star = std::sqrt(3.0);
  for (double l = 0.2; l < 1.99; l += 0.01) {
    if (std::abs(l - star) < 1e-3) continue;
    const TetKind kind = classify({1, 1, 1, 1, 1, l});
    CAPTURE(l);
    CHECK(kind == (l < star ? TetKind::kEuclidean : TetKind::kMinkowskian));
  }
  CHECK(classify({1, 1, 1, 1, 1, star}) == TetKind::kDegenerate);
}

TEST_CASE("face violations") {
  try {
    cayley_menger({1, 1, 1, 1, 3, 1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kFaceViolation);
  }
  CHECK_THROWS_AS(analyze({-1, 1, 1, 1, 1, 1}), Error);
}

TEST_CASE("embedding reproduces the edges") {
  std::mt19937_64 rng(0x5eed22);
  for (int trial = 0; trial < 200; ++trial) {
    const Edges e = testing::random_euclidean(rng);
    const auto p = euclid_embed(e);
    CHECK(p[0].norm() == 0.0);
    CHECK(p[1].y() == 0.0);
    CHECK(p[1].z() == 0.0);
    CHECK(p[2].z() == 0.0);
    CHECK(p[2].y() > 0);
    CHECK(p[3].z() > 0);
    const Edges back = testing::edges_from_points(p);
    for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(back[i] - e[i]) < 1e-10);
  }
}

TEST_CASE("dihedral angles against explicit normals") {
  std::mt19937_64 rng(0x5eed23);
  for (int trial = 0; trial < 100; ++trial) {
    const Edges e = testing::random_euclidean(rng);
    const auto p = euclid_embed(e);
    const Edges interior = interior_dihedrals(e);
    const Edges exterior = exterior_dihedrals(e);
    for (std::size_t i = 0; i < 6; ++i) {
      const auto [u, v] = LabelSextet::kEdgeVertices[i];
      const auto [k, l] = opposite_vertices(i);
      const Eigen::Vector3d axis = (p[v] - p[u]).normalized();
      Eigen::Vector3d x = p[k] - p[u], y = p[l] - p[u];
      x -= x.dot(axis) * axis;
      y -= y.dot(axis) * axis;
      const double angle = std::acos(std::clamp(x.normalized().dot(y.normalized()), -1.0, 1.0));
      CHECK(std::abs(interior[i] - angle) < 1e-9);
      CHECK(std::abs(interior[i] + exterior[i] - std::numbers::pi) < 1e-14);
    }
  }
}

TEST_CASE("scaling") {
  std::mt19937_64 rng(0x5eed24);
  for (int trial = 0; trial < 50; ++trial) {
    const Edges e = testing::random_euclidean(rng);
    const TetGeometry g = analyze(e);
    for (double lambda : {2.0, 10.0}) {
      Edges s = e;
      for (double& x : s) x *= lambda;
      const TetGeometry h = analyze(s);
      CHECK(h.cayley_det == doctest::Approx(std::pow(lambda, 6) * g.cayley_det).epsilon(1e-9));
      CHECK(h.volume == doctest::Approx(std::pow(lambda, 3) * g.volume).epsilon(1e-9));
      for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(h.exterior_dihedrals[i] - g.exterior_dihedrals[i]) < 1e-10);
    }
  }
}

TEST_CASE("clamped arccos") {
  CHECK(clamped_acos(1.0 + 1e-12) == 0.0);
  CHECK(clamped_acos(-1.0 - 1e-12) == doctest::Approx(std::numbers::pi));
  CHECK_THROWS_AS(clamped_acos(1.1), Error);
}

TEST_CASE("opposite vertices") {
  for (std::size_t e = 0; e < 6; ++e) {
    const auto [u, v] = LabelSextet::kEdgeVertices[e];
    const auto [k, l] = opposite_vertices(e);
    CHECK(k != l);
    CHECK(u + v + k + l == 6);
  }
}
