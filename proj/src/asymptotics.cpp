#include "sixj/asymptotics.hpp"

#include "sixj/classical.hpp"
#include "sixj/error.hpp"
#include "sixj/parallel.hpp"
#include "sixj/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace sixj {
namespace {

constexpr double kPi = std::numbers::pi;

TetGeometry euclidean_geometry(const LabelSextet& s) {
  const TetGeometry g = analyze(edges_of(s));
  if (g.kind != TetKind::kEuclidean) {
    std::ostringstream msg;
    msg << "tetrahedron " << s << " is " << to_string(g.kind) << ", not Euclidean";
    throw Error(ErrorKind::kRegime, msg.str());
  }
  return g;
}

double mean_square(const std::vector<double>& v, std::size_t from, std::size_t count) {
  double s = 0.0;
  for (std::size_t i = from; i < from + count; ++i) s += v[i] * v[i];
  return s / double(count);
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::kEuclidean: return "Euclidean";
    case Regime::kMinkowskian: return "Minkowskian";
    case Regime::kSpherical: return "Spherical";
  }
  return "unknown";
}

std::vector<long> KRange::values() const {
  if (step <= 0) throw Error(ErrorKind::kInvalidArgument, "k step must be positive");
  if (first < 1 || last < first) throw Error(ErrorKind::kInvalidArgument, "k range must satisfy 1 <= first <= last");
  std::vector<long> out;
  for (long k = first; k <= last; k += step) out.push_back(k);
  return out;
}

Edges edges_of(const LabelSextet& s) {
  Edges e{};
  for (std::size_t i = 0; i < 6; ++i) e[i] = s[i];
  return e;
}

double ponzano_regge_amplitude(const LabelSextet& s, long k) {
  const TetGeometry g = euclidean_geometry(s);
  const double kk = double(k);
  return std::sqrt(2.0 / (3.0 * kPi * g.volume * kk * kk * kk));
}

double ponzano_regge_phase(const LabelSextet& s, long k) {
  const TetGeometry g = euclidean_geometry(s);
  double phase = kPi / 4;
  for (std::size_t i = 0; i < 6; ++i) phase += (double(k) * s[i] + 1.0) * g.exterior_dihedrals[i] / 2;
  return phase;
}

double ponzano_regge_estimate(const LabelSextet& s, long k) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "k must be positive");
  return ponzano_regge_amplitude(s, k) * std::cos(ponzano_regge_phase(s, k));
}

double wigner_rms(const LabelSextet& s) {
  return std::sqrt(1.0 / (3.0 * kPi * euclidean_geometry(s).volume));
}

WoodwardIngredients woodward_ingredients(const Fractions& fractions) {
  Edges l{};
  for (std::size_t i = 0; i < 6; ++i) {
    const Fraction& a = fractions[i];
    if (a <= 0 || a >= 1) throw Error(ErrorKind::kInvalidArgument, "fractions must lie in (0, 1)");
    l[i] = kPi * boost::rational_cast<double>(a);
  }
  WoodwardIngredients w;
  w.tet = spherical_gram(l);
  w.interior_dihedrals = spherical_dihedrals(w.tet);
  for (std::size_t i = 0; i < 6; ++i) w.exterior_dihedrals[i] = kPi - w.interior_dihedrals[i];
  w.volume = spherical_volume(w.tet);
  return w;
}

LabelSextet woodward_labels(const Fractions& fractions, long k) {
  std::array<int, 6> labels{};
  for (std::size_t i = 0; i < 6; ++i) {
    const Fraction scaled = fractions[i] * k;
    if (scaled.denominator() != 1) {
      throw Error(ErrorKind::kIntegrality,
                  "k=" + std::to_string(k) + " times fraction " + std::to_string(fractions[i].numerator()) +
                      "/" + std::to_string(fractions[i].denominator()) + " is not an integer");
    }
    labels[i] = static_cast<int>(scaled.numerator());
  }
  return LabelSextet(labels);
}

double woodward_amplitude(const Fractions& fractions, long k) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "k must be positive");
  const SphericalTet t = woodward_ingredients(fractions).tet;
  const double kk = double(k);
  return std::sqrt(4.0 * kPi * kPi / (kk * kk * kk * std::sqrt(t.gram_det)));
}

double woodward_estimate(const Fractions& fractions, long k) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "k must be positive");
  const LabelSextet labels = woodward_labels(fractions, k);
  const WoodwardIngredients w = woodward_ingredients(fractions);
  const double kk = double(k);
  const double amplitude = std::sqrt(4.0 * kPi * kPi / (kk * kk * kk * std::sqrt(w.tet.gram_det)));
  double phase = kPi / 4 - kk * w.volume / kPi;
  for (std::size_t i = 0; i < 6; ++i) phase += (labels[i] + 1.0) * w.exterior_dihedrals[i] / 2;
  return amplitude * std::cos(phase);
}

std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

AsymptoticsReport verify_euclidean(const LabelSextet& s, const KRange& k_range,
                                   const SweepOptions& options) {
  if (options.window < 1) throw Error(ErrorKind::kInvalidArgument, "window must be positive");
  const double rms_unit = wigner_rms(s);
  const auto ks = k_range.values();

  std::vector<AsymptoticsRow> rows(ks.size());
  parallel_for(ks.size(), options.threads, [&](std::size_t i) {
    const long k = ks[i];
    auto& row = rows[i];
    row.k = k;
    row.exact = sixj(s.scaled(static_cast<int>(k))).to_double();
    row.estimate = ponzano_regge_estimate(s, k);
    row.ratio = row.exact == 0.0 ? 0.0 : row.exact / row.estimate;
  });

  AsymptoticsReport report;
  report.regime = Regime::kEuclidean;
  std::vector<double> exact, estimate, envelope;
  for (const auto& row : rows) {
    if (row.exact == 0.0) {
      report.excluded_k.push_back(row.k);
      continue;
    }
    exact.push_back(row.exact);
    estimate.push_back(row.estimate);
    envelope.push_back(rms_unit / std::pow(double(row.k), 1.5));
  }
  report.rows = std::move(rows);
  if (exact.empty()) throw Error(ErrorKind::kAllZeroWindow, "every 6j-symbol in the k range is zero");

  const std::size_t width = std::min<std::size_t>(std::size_t(options.window), exact.size());
  double sq = 0.0;
  std::size_t windows = 0;
  for (std::size_t from = 0; from + width <= exact.size(); ++from, ++windows) {
    const double rel = std::sqrt(mean_square(exact, from, width) / mean_square(envelope, from, width)) - 1.0;
    sq += rel * rel;
  }
  report.envelope_rms_error = std::sqrt(sq / double(windows));
  report.phase_correlation = pearson(exact, estimate);
  return report;
}

MinkowskianFit verify_minkowskian(const LabelSextet& s, const KRange& k_range,
                                  const SweepOptions& options) {
  const TetKind kind = analyze(edges_of(s)).kind;
  if (kind != TetKind::kMinkowskian) {
    std::ostringstream msg;
    msg << "tetrahedron " << s << " is " << to_string(kind) << ", not Minkowskian";
    throw Error(ErrorKind::kRegime, msg.str());
  }
  const auto ks = k_range.values();
  std::vector<ExactSixJ> values(ks.size());
  parallel_for(ks.size(), options.threads,
               [&](std::size_t i) { values[i] = sixj(s.scaled(static_cast<int>(ks[i]))); });

  MinkowskianFit fit;
  fit.report.regime = Regime::kMinkowskian;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (values[i].is_zero()) {
      fit.report.excluded_k.push_back(ks[i]);
      continue;
    }
    x.push_back(double(ks[i]));
    y.push_back(values[i].log_abs(64).to_double());
  }
  if (x.size() < 2) {
    throw Error(ErrorKind::kAllZeroWindow, "fewer than two nonzero 6j-symbols in the k range");
  }

  const double n = double(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);

  for (std::size_t i = 0; i < ks.size(); ++i) {
    AsymptoticsRow row;
    row.k = ks[i];
    row.exact = values[i].to_double();
    row.estimate = std::exp(fit.intercept + fit.slope * double(ks[i]));
    if (values[i].sign() < 0) row.estimate = -row.estimate;
    row.ratio = row.exact == 0.0 ? 0.0 : row.exact / row.estimate;
    fit.report.rows.push_back(row);
  }
  return fit;
}

AsymptoticsReport verify_woodward(const Fractions& fractions, const std::vector<long>& k_list,
                                  const SweepOptions& options) {
  AsymptoticsReport report;
  report.regime = Regime::kSpherical;
  if (k_list.empty()) return report;

  std::vector<long> ks = k_list;
  std::sort(ks.begin(), ks.end());
  for (long k : ks) (void)woodward_labels(fractions, k);
  (void)woodward_ingredients(fractions);

  std::vector<AsymptoticsRow> rows(ks.size());
  parallel_for(ks.size(), options.threads, [&](std::size_t i) {
    const long k = ks[i];
    auto& row = rows[i];
    row.k = k;
    const RootOfUnityLevel level(static_cast<int>(k + 2));
    row.exact = qsixj(woodward_labels(fractions, k), level).to_double();
    row.estimate = woodward_estimate(fractions, k);
    row.ratio = row.exact == 0.0 ? 0.0 : row.exact / row.estimate;
  });

  std::vector<double> exact, estimate, envelope;
  for (const auto& row : rows) {
    if (row.exact == 0.0) {
      report.excluded_k.push_back(row.k);
      continue;
    }
    exact.push_back(row.exact);
    estimate.push_back(row.estimate);
    envelope.push_back(woodward_amplitude(fractions, row.k) / std::numbers::sqrt2);
  }
  report.rows = std::move(rows);
  report.phase_correlation = pearson(exact, estimate);
  if (!exact.empty()) {
    report.envelope_rms_error =
        std::abs(std::sqrt(mean_square(exact, 0, exact.size()) / mean_square(envelope, 0, exact.size())) - 1.0);
  }
  return report;
}

}  // namespace sixj
