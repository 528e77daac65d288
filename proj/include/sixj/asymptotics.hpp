#pragma once

#include "sixj/geometry.hpp"
#include "sixj/labels.hpp"

#include <boost/rational.hpp>

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace sixj {

using Fraction = boost::rational<long>;
using Fractions = std::array<Fraction, 6>;

enum class Regime { kEuclidean, kMinkowskian, kSpherical };

std::string_view to_string(Regime regime);

/// Inclusive integer range first:last:step.
struct KRange {
  long first = 1;
  long last = 1;
  long step = 1;

  std::vector<long> values() const;
};

struct AsymptoticsRow {
  long k = 0;
  double exact = 0.0;
  double estimate = 0.0;
  double ratio = 0.0;
};

struct AsymptoticsReport {
  std::vector<AsymptoticsRow> rows;  // sorted by k
  std::vector<long> excluded_k;      // exact zeros, left out of the statistics
  double envelope_rms_error = 0.0;
  std::optional<double> phase_correlation;
  Regime regime = Regime::kEuclidean;
};

struct MinkowskianFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  AsymptoticsReport report;  // estimate column holds the fitted exponential
};

struct SweepOptions {
  int window = 21;
  unsigned threads = 0;
};

/// sqrt(2 / (3 pi V k^3)), V the volume of the tetrahedron with edges s.
double ponzano_regge_amplitude(const LabelSextet& s, long k);

/// sum over edges of (k label + 1) theta / 2 + pi / 4, theta exterior.
double ponzano_regge_phase(const LabelSextet& s, long k);

/// amplitude * cos(phase). Throws kRegime unless s is Euclidean.
double ponzano_regge_estimate(const LabelSextet& s, long k);

/// sqrt(1 / (3 pi V)). Throws kRegime unless s is Euclidean.
double wigner_rms(const LabelSextet& s);

struct WoodwardIngredients {
  SphericalTet tet;
  Edges interior_dihedrals{};
  Edges exterior_dihedrals{};
  double volume = 0.0;
};

/// Spherical tetrahedron with edge lengths pi * fractions.
/// Throws kInvalidArgument for fractions outside (0, 1), kNonRealizable.
WoodwardIngredients woodward_ingredients(const Fractions& fractions);

/// sqrt(4 pi^2 / (k^3 sqrt G)).
double woodward_amplitude(const Fractions& fractions, long k);

/// sqrt(4 pi^2 / (k^3 sqrt G)) cos(sum (k alpha + 1) theta / 2 - k V / pi + pi / 4)
/// with l = pi alpha and theta exterior. Throws kIntegrality unless every
/// k alpha is an integer.
double woodward_estimate(const Fractions& fractions, long k);

/// Labels k * fractions; throws kIntegrality if any is not an integer.
LabelSextet woodward_labels(const Fractions& fractions, long k);

/// Exact 6j of k s against the Ponzano-Regge estimate. The envelope error is
/// the root mean square, over every full window of `window` consecutive
/// nonzero rows, of |rms(exact) / rms(wigner_rms k^{-3/2}) - 1|.
AsymptoticsReport verify_euclidean(const LabelSextet& s, const KRange& k_range,
                                   const SweepOptions& options = {});

/// Least-squares line through (k, log|6j(k s)|), zeros skipped.
/// Throws kRegime unless s is Minkowskian, kAllZeroWindow when fewer than
/// two values are nonzero.
MinkowskianFit verify_minkowskian(const LabelSextet& s, const KRange& k_range,
                                  const SweepOptions& options = {});

/// Quantum 6j at r = k + 2 against the Woodward estimate; reporting only.
/// The envelope error compares rms(exact) with rms(amplitude / sqrt 2) over
/// all nonzero rows.
AsymptoticsReport verify_woodward(const Fractions& fractions, const std::vector<long>& k_list,
                                  const SweepOptions& options = {});

/// Pearson correlation; nullopt for fewer than two points or zero variance.
std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y);

Edges edges_of(const LabelSextet& s);

}  // namespace sixj
