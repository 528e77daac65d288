#include "sixj/error.hpp"
#include "sixj/geometry.hpp"
#include "sixj/labels.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace sixj {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr int kPathScanPoints = 256;

Eigen::Matrix4d gram_of(const Edges& l) {
  Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [u, v] = LabelSextet::kEdgeVertices[i];
    g(u, v) = g(v, u) = std::cos(l[i]);
  }
  return g;
}

// The Gram matrix of four nearby unit vectors is close to the all-ones
// matrix, so its entries carry little information about a small
// tetrahedron. Replacing v1..v3 by v_i - v0 (a unimodular change of basis)
// gives entries built from squared chords 4 sin^2(l/2), which keep full
// relative precision; the Schur complement of the leading 1 then has the
// same determinant as the Gram matrix.
struct ChordForm {
  Eigen::Vector3d u;  // 1 - q_0k / 2, i.e. cos l_0k
  Eigen::Matrix3d schur;
};

ChordForm chord_form(const Edges& l) {
  Eigen::Matrix4d q = Eigen::Matrix4d::Zero();
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [u, v] = LabelSextet::kEdgeVertices[i];
    const double chord = 2.0 * std::sin(l[i] / 2.0);
    q(u, v) = q(v, u) = chord * chord;
  }
  ChordForm f;
  Eigen::Vector3d a;
  for (int k = 1; k < 4; ++k) {
    a(k - 1) = -q(0, k) / 2.0;
    for (int m = 1; m < 4; ++m) f.schur(k - 1, m - 1) = (q(0, k) + q(0, m) - q(k, m)) / 2.0;
  }
  f.schur -= a * a.transpose();
  f.u = a + Eigen::Vector3d::Ones();
  return f;
}

bool positive_definite(const ChordForm& f) {
  Eigen::LLT<Eigen::Matrix3d> llt(f.schur);
  return llt.info() == Eigen::Success && f.schur.determinant() > 0.0;
}

bool positive_definite(const Edges& l) { return positive_definite(chord_form(l)); }

Edges dihedrals_of(const ChordForm& f) {
  const Eigen::Matrix3d s_inv = f.schur.inverse();
  const Eigen::Vector3d s_inv_u = s_inv * f.u;
  Eigen::Matrix4d inv;
  inv(0, 0) = 1.0 + f.u.dot(s_inv_u);
  inv.block<1, 3>(0, 1) = -s_inv_u.transpose();
  inv.block<3, 1>(1, 0) = -s_inv_u;
  inv.block<3, 3>(1, 1) = s_inv;
  Edges out{};
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [k, l] = opposite_vertices(i);
    out[i] = clamped_acos(-inv(k, l) / std::sqrt(inv(k, k) * inv(l, l)));
  }
  return out;
}

Edges dihedrals_of(const Edges& l) { return dihedrals_of(chord_form(l)); }

Edges lerp(const Edges& a, const Edges& b, double t) {
  Edges out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

double sum_l_theta(const Edges& l) {
  const Edges theta = dihedrals_of(l);
  double s = 0.0;
  for (std::size_t i = 0; i < 6; ++i) s += l[i] * theta[i];
  return s;
}

void require_on_region(const Edges& l) {
  if (!positive_definite(l)) {
    throw Error(ErrorKind::kPathLeftRegion, "integration path leaves the realizable region");
  }
}

// dV = 1/2 sum l d(theta), integrated by parts along a straight segment:
//   V(b) - V(a) = 1/2 [sum l theta]_a^b - 1/2 int sum theta dl.
double segment_increment(const Edges& a, const Edges& b, double tolerance) {
  for (int i = 0; i <= kPathScanPoints; ++i) require_on_region(lerp(a, b, double(i) / kPathScanPoints));

  const auto integrand = [&](double t) {
    const Edges l = lerp(a, b, t);
    const ChordForm f = chord_form(l);
    if (!positive_definite(f)) {
      throw Error(ErrorKind::kPathLeftRegion, "integration path leaves the realizable region");
    }
    const Edges theta = dihedrals_of(f);
    double s = 0.0;
    for (std::size_t i = 0; i < 6; ++i) s += theta[i] * (b[i] - a[i]);
    return s;
  };
  double error = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, 0.0, 1.0, 20, tolerance * 1e-4, &error);
  if (error > tolerance) {
    throw Error(ErrorKind::kPathLeftRegion,
                "Schlafli integral did not converge (error estimate " + std::to_string(error) + ")");
  }
  return 0.5 * (sum_l_theta(b) - sum_l_theta(a)) - 0.5 * integral;
}

void require_realizable(const SphericalTet& t) {
  if (!t.realizable) {
    throw Error(ErrorKind::kNonRealizable, "spherical Gram matrix is not positive definite");
  }
}

double polyline_volume(const std::vector<Edges>& points, double tolerance) {
  double v = std::numbers::pi * std::numbers::pi / 8;
  for (std::size_t i = 1; i < points.size(); ++i) {
    v += segment_increment(points[i - 1], points[i], tolerance / double(points.size()));
  }
  return v;
}

Edges all_right() {
  Edges out{};
  out.fill(kHalfPi);
  return out;
}

}  // namespace

SphericalTet spherical_gram(const Edges& lengths) {
  for (double l : lengths) {
    if (!(l > 0.0 && l < std::numbers::pi)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "spherical edge length " + std::to_string(l) + " outside (0, pi)");
    }
  }
  SphericalTet t;
  t.lengths = lengths;
  t.gram = gram_of(lengths);
  const ChordForm f = chord_form(lengths);
  t.gram_det = f.schur.determinant();
  t.realizable = positive_definite(f);
  return t;
}

Edges spherical_dihedrals(const SphericalTet& t) {
  require_realizable(t);
  return dihedrals_of(t.lengths);
}

double spherical_volume(const SphericalTet& t, double tolerance) {
  require_realizable(t);
  return polyline_volume({all_right(), t.lengths}, tolerance);
}

double spherical_volume_via(const SphericalTet& t, const Edges& waypoint, double tolerance) {
  require_realizable(t);
  const SphericalTet w = spherical_gram(waypoint);
  if (!w.realizable) {
    throw Error(ErrorKind::kPathLeftRegion, "waypoint is not a realizable spherical tetrahedron");
  }
  return polyline_volume({all_right(), waypoint, t.lengths}, tolerance);
}

}  // namespace sixj
