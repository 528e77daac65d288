#include "sixj/turaev_viro.hpp"

#include "sixj/error.hpp"
#include "sixj/labels.hpp"
#include "sixj/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace sixj {
namespace {

constexpr long kGuardBits = 16;
constexpr std::size_t kMaxTableEntries = std::size_t{1} << 26;

// Edge positions follow the enumeration order; faces and tetrahedra are
// attached to the position at which their last edge receives a label.
struct Plan {
  std::size_t edges = 0;
  std::vector<std::vector<std::array<std::size_t, 3>>> faces_at;
  std::vector<std::vector<std::array<std::size_t, 6>>> tets_at;
};

Plan make_plan(const Triangulation& t) {
  const std::size_t n = t.edge_count();
  std::vector<int> degree(n, 0);
  for (const auto& tet : t.tetrahedra()) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) ++degree[t.edge_index(tet[i], tet[j])];
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&degree](std::size_t x, std::size_t y) { return degree[x] > degree[y]; });
  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;

  Plan plan;
  plan.edges = n;
  plan.faces_at.resize(n);
  plan.tets_at.resize(n);
  const auto pos = [&](VertexId u, VertexId v) { return position[t.edge_index(u, v)]; };

  for (const Face& f : t.faces()) {
    const std::array<std::size_t, 3> p{pos(f[0], f[1]), pos(f[0], f[2]), pos(f[1], f[2])};
    plan.faces_at[*std::max_element(p.begin(), p.end())].push_back(p);
  }
  for (const auto& tet : t.tetrahedra()) {
    std::array<std::size_t, 6> p{};
    for (std::size_t i = 0; i < 6; ++i) {
      const auto [u, v] = LabelSextet::kEdgeVertices[i];
      p[i] = pos(tet[u], tet[v]);
    }
    plan.tets_at[*std::max_element(p.begin(), p.end())].push_back(p);
  }
  return plan;
}

struct Tables {
  int labels = 0;  // r - 1
  std::vector<Real> edge_weight;    // [x+1]
  std::vector<double> edge_shadow;
  std::vector<char> admissible;     // labels^3
  std::vector<std::int32_t> index;  // labels^6 -> slot in values, or -1
  std::vector<Real> values;
  std::vector<double> shadows;
  Real zero;

  Tables(RootOfUnityLevel level, long bits) : labels(level.r() - 1), zero(bits) {
    const std::size_t n = std::size_t(labels);
    if (n * n * n * n * n * n > kMaxTableEntries) {
      throw Error(ErrorKind::kBoundExceeded, "r=" + std::to_string(level.r()) + " is too large for the state sum");
    }
    const auto q = QuantumFactorials::get(level, bits);
    for (int x = 0; x < labels; ++x) {
      edge_weight.push_back(q->qint(x + 1));
      edge_shadow.push_back(edge_weight.back().to_double());
    }
    admissible.assign(n * n * n, 0);
    for (int a = 0; a < labels; ++a) {
      for (int b = 0; b < labels; ++b) {
        for (int c = 0; c < labels; ++c) admissible[(std::size_t(a) * n + b) * n + c] = q_admissible(a, b, c, level);
      }
    }
    index.assign(n * n * n * n * n * n, -1);
    for (int a = 0; a < labels; ++a) {
      for (int b = 0; b < labels; ++b) {
        for (int e = 0; e < labels; ++e) {
          if (!face_ok(a, b, e)) continue;
          for (int c = 0; c < labels; ++c) {
            for (int d = 0; d < labels; ++d) {
              if (!face_ok(c, d, e)) continue;
              for (int f = 0; f < labels; ++f) {
                if (!face_ok(a, c, f) || !face_ok(b, d, f)) continue;
                index[key({a, b, c, d, e, f})] = std::int32_t(values.size());
                values.push_back(qsixj(LabelSextet(a, b, c, d, e, f), level, bits));
                shadows.push_back(values.back().to_double());
              }
            }
          }
        }
      }
    }
  }

  bool face_ok(int a, int b, int c) const {
    const std::size_t n = std::size_t(labels);
    return admissible[(std::size_t(a) * n + b) * n + c] != 0;
  }

  std::size_t key(const std::array<int, 6>& s) const {
    std::size_t k = 0;
    for (int x : s) k = k * std::size_t(labels) + std::size_t(x);
    return k;
  }
};

class Walker {
 public:
  Walker(const Plan& plan, const Tables& tables, bool prune, long bits)
      : plan_(plan), tables_(tables), prune_(prune), labels_(plan.edges, 0), sum_(bits) {
    prefix_.reserve(plan.edges + 1);
    for (std::size_t i = 0; i <= plan.edges; ++i) prefix_.emplace_back(bits);
    shadow_prefix_.assign(plan.edges + 1, 0.0);
    prefix_[0] = Real(1L, bits);
    shadow_prefix_[0] = 1.0;
  }

  void run_branch(int first_label) { step(0, first_label); }

  const Real& sum() const { return sum_; }
  double shadow() const { return shadow_; }
  std::uint64_t nonzero() const { return nonzero_; }

 private:
  void descend(std::size_t p) {
    if (p == plan_.edges) {
      sum_ += prefix_[p];
      shadow_ += shadow_prefix_[p];
      if (!prefix_[p].is_zero()) ++nonzero_;
      return;
    }
    for (int x = 0; x < tables_.labels; ++x) step(p, x);
  }

  void step(std::size_t p, int x) {
    labels_[p] = x;
    bool negate = (x % 2) != 0;
    bool vanishes = false;
    for (const auto& f : plan_.faces_at[p]) {
      const int a = labels_[f[0]], b = labels_[f[1]], c = labels_[f[2]];
      if (!tables_.face_ok(a, b, c)) {
        if (prune_) return;
        vanishes = true;
        continue;
      }
      if (((a + b + c) / 2) % 2 != 0) negate = !negate;
    }

    Real& cur = prefix_[p + 1];
    double& scur = shadow_prefix_[p + 1];
    if (vanishes) {
      cur = tables_.zero;
      scur = 0.0;
    } else {
      mpfr_mul(cur.get(), prefix_[p].get(), tables_.edge_weight[std::size_t(x)].get(), MPFR_RNDN);
      scur = shadow_prefix_[p] * tables_.edge_shadow[std::size_t(x)];
      for (const auto& t : plan_.tets_at[p]) {
        std::array<int, 6> s{};
        for (std::size_t i = 0; i < 6; ++i) s[i] = labels_[t[i]];
        const std::int32_t slot = tables_.index[tables_.key(s)];
        if (slot < 0) {
          cur = tables_.zero;
          scur = 0.0;
          break;
        }
        mpfr_mul(cur.get(), cur.get(), tables_.values[std::size_t(slot)].get(), MPFR_RNDN);
        scur *= tables_.shadows[std::size_t(slot)];
      }
      if (negate) {
        mpfr_neg(cur.get(), cur.get(), MPFR_RNDN);
        scur = -scur;
      }
    }
    descend(p + 1);
  }

  const Plan& plan_;
  const Tables& tables_;
  bool prune_;
  std::vector<int> labels_;
  std::vector<Real> prefix_;
  std::vector<double> shadow_prefix_;
  Real sum_;
  double shadow_ = 0.0;
  std::uint64_t nonzero_ = 0;
};

}  // namespace

bool TvResult::shadow_agrees(double tolerance) const {
  const double v = value.to_double();
  return std::abs(v - shadow) <= tolerance * std::max(1.0, std::abs(v));
}

TvResult tv_invariant(const Triangulation& t, RootOfUnityLevel level, const TvOptions& options) {
  const long bits = options.precision_bits + kGuardBits;
  const Plan plan = make_plan(t);
  const Tables tables(level, bits);

  const std::size_t branches = std::size_t(tables.labels);
  std::vector<Real> sums;
  std::vector<double> shadows(branches, 0.0);
  std::vector<std::uint64_t> counts(branches, 0);
  sums.reserve(branches);
  for (std::size_t b = 0; b < branches; ++b) sums.emplace_back(bits);

  parallel_for(branches, options.threads, [&](std::size_t b) {
    Walker walker(plan, tables, options.prune, bits);
    walker.run_branch(int(b));
    sums[b] = walker.sum();
    shadows[b] = walker.shadow();
    counts[b] = walker.nonzero();
  });

  Real total(bits);
  double shadow_total = 0.0;
  TvResult result;
  for (std::size_t b = 0; b < branches; ++b) {
    total += sums[b];
    shadow_total += shadows[b];
    result.nonzero_states += counts[b];
  }

  Real w2(bits);
  double w2_shadow = 0.0;
  for (std::size_t x = 0; x < branches; ++x) {
    w2 += tables.edge_weight[x] * tables.edge_weight[x];
    w2_shadow += tables.edge_shadow[x] * tables.edge_shadow[x];
  }
  const auto vertices = static_cast<unsigned long>(t.vertex_count());
  Real norm(bits);
  mpfr_pow_ui(norm.get(), w2.get(), vertices, MPFR_RNDN);
  total /= norm;

  result.value = Real(options.precision_bits);
  mpfr_set(result.value.get(), total.get(), MPFR_RNDN);
  result.shadow = shadow_total / std::pow(w2_shadow, double(vertices));
  return result;
}

std::vector<TvRow> tv_sweep(const Triangulation& t, std::vector<int> r_list, const TvOptions& options) {
  std::sort(r_list.begin(), r_list.end());
  std::vector<TvRow> rows;
  for (int r : r_list) rows.push_back({r, tv_invariant(t, RootOfUnityLevel(r), options)});
  return rows;
}

}  // namespace sixj
