#pragma once

#include <Eigen/Dense>

#include <array>
#include <string_view>

namespace sixj {

/// Six edge lengths in LabelSextet order, joining vertex pairs
/// a=(0,2), b=(1,2), c=(0,3), d=(1,3), e=(0,1), f=(2,3).
using Edges = std::array<double, 6>;

enum class TetKind { kEuclidean, kMinkowskian, kDegenerate };

std::string_view to_string(TetKind kind);

/// The two tetrahedron vertices not on the given edge.
std::array<int, 2> opposite_vertices(std::size_t edge);

inline constexpr double kDegeneracyTolerance = 1e-12;
inline constexpr double kClampTolerance = 1e-9;

struct TetGeometry {
  Edges edges{};
  double cayley_det = 0.0;
  TetKind kind = TetKind::kDegenerate;
  double volume = 0.0;
  Edges exterior_dihedrals{};

  Edges interior_dihedrals() const;
};

/// 5x5 Cayley-Menger determinant, normalized so that det = 288 V^2.
/// Throws kFaceViolation when a face fails the triangle inequality.
double cayley_menger(const Edges& edges);

/// Sign of the Cayley-Menger determinant; |det| < tol * (max edge)^6 is
/// Degenerate.
TetKind classify(const Edges& edges, double relative_tolerance = kDegeneracyTolerance);

/// Vertex coordinates: v0 at the origin, v1 on the x axis, v2 in the xy
/// plane (y > 0), v3 with z > 0. Throws kClassification unless Euclidean.
std::array<Eigen::Vector3d, 4> euclid_embed(const Edges& edges);

double euclid_volume(const Edges& edges);

/// pi minus the interior dihedral angle, per edge, from outward face normals.
Edges exterior_dihedrals(const Edges& edges);
Edges interior_dihedrals(const Edges& edges);

TetGeometry analyze(const Edges& edges, double relative_tolerance = kDegeneracyTolerance);

/// arccos of a cosine that may overshoot [-1, 1] by rounding; overshoot past
/// kClampTolerance throws kClassification.
double clamped_acos(double cosine);

// Spherical tetrahedra in the unit 3-sphere.

struct SphericalTet {
  Edges lengths{};
  Eigen::Matrix4d gram = Eigen::Matrix4d::Identity();
  double gram_det = 1.0;
  bool realizable = true;
};

/// Gram matrix with unit diagonal and cos(l_ij) off the diagonal.
/// Throws kInvalidArgument for any length outside (0, pi).
SphericalTet spherical_gram(const Edges& lengths);

/// Interior dihedral angle along each edge, from the inverse Gram matrix.
/// Throws kNonRealizable unless the Gram matrix is positive definite.
Edges spherical_dihedrals(const SphericalTet& t);

inline constexpr double kSchlafliTolerance = 1e-8;

/// Volume by integrating dV = 1/2 sum l_e d(theta_e) along the straight line
/// in length space from the all-pi/2 tetrahedron (volume pi^2/8).
/// Throws kNonRealizable, or kPathLeftRegion if the path loses positive
/// definiteness.
double spherical_volume(const SphericalTet& t, double tolerance = kSchlafliTolerance);

/// Same integral along the polyline pi/2 -> waypoint -> target.
double spherical_volume_via(const SphericalTet& t, const Edges& waypoint,
                            double tolerance = kSchlafliTolerance);

}  // namespace sixj
