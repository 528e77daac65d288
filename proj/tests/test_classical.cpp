#include "sixj/classical.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace sixj;

namespace {

ExactSixJ exact(int sign, long num, long den) { return ExactSixJ(sign, Rational(num, den)); }

/// Nine random labels whose right-hand side is nonzero.
PentagonLabels random_pentagon(std::mt19937_64& rng, int max_label) {
  std::uniform_int_distribution<int> label(0, max_label);
  for (;;) {
    PentagonLabels L{label(rng), label(rng), label(rng), label(rng), label(rng),
                     label(rng), label(rng), label(rng), label(rng)};
    bool ok = true;
    for (const auto& t : L.outer_triples()) ok = ok && admissible(t[0], t[1], t[2]);
    if (!ok) continue;
    const auto lhs = sixj::sixj(LabelSextet::from_wigner(L.p, L.q, L.r, L.e, L.a, L.d));
    const auto rhs = sixj::sixj(LabelSextet::from_wigner(L.p, L.q, L.r, L.f, L.b, L.c));
    if (!lhs.is_zero() && !rhs.is_zero()) return L;
  }
}

}  // namespace

TEST_CASE("tabulated values") {
  CHECK(sixj::sixj({2, 2, 2, 2, 2, 2}) == exact(1, 1, 36));
  CHECK(sixj::sixj({0, 3, 5, 4, 3, 5}) == exact(1, 1, 24));
  CHECK(sixj::sixj({0, 2, 2, 2, 2, 2}) == exact(-1, 1, 9));
  CHECK(sixj::sixj({1, 1, 1, 1, 2, 2}) == exact(1, 1, 36));
  CHECK(sixj::sixj({1, 1, 1, 1, 0, 2}) == exact(1, 1, 4));
  CHECK(sixj::sixj({3, 4, 5, 6, 3, 4}) == exact(1, 1, 175));
  CHECK(sixj::sixj({4, 6, 2, 8, 6, 6}) == exact(1, 11, 882));
  CHECK(sixj::sixj({5, 5, 5, 5, 4, 6}) == exact(-1, 841, 176400));
  CHECK(sixj::sixj({8, 8, 8, 8, 8, 8}) == exact(-1, 218089, 324648324));
}

TEST_CASE("a zero label gives the closed form") {
  for (int b = 0; b <= 12; ++b) {
    for (int c = 0; c <= 12; ++c) {
      for (int d = 0; d <= 12; ++d) {
        const LabelSextet s(0, b, c, d, b, c);
        if (!faces_admissible(s)) continue;
        const int sign = ((b + c + d) / 2) % 2 ? -1 : 1;
        CHECK(sixj::sixj(s) == ExactSixJ(sign, Rational(1, (b + 1) * (c + 1))));
      }
    }
  }
}

TEST_CASE("inadmissible faces give zero") {
  CHECK(sixj::sixj({1, 1, 1, 1, 1, 1}).is_zero());
  CHECK(sixj::sixj({2, 2, 2, 2, 2, 8}).is_zero());
  CHECK(sixj::sixj({0, 2, 2, 2, 4, 2}).is_zero());
}

TEST_CASE("rendering") {
  CHECK(sixj::sixj({2, 2, 2, 2, 2, 2}).to_string() == "sqrt(1/36)");
  CHECK(sixj::sixj({0, 2, 2, 2, 2, 2}).to_string() == "-sqrt(1/9)");
  CHECK(ExactSixJ(1, Rational(4)).to_string() == "sqrt(4)");
  CHECK(ExactSixJ().to_string() == "0");
  CHECK(sixj::sixj({1, 1, 1, 1, 0, 2}).to_double() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(sixj::sixj({2, 2, 2, 2, 2, 2}).log_abs().to_double() ==
        doctest::Approx(-std::log(6.0)).epsilon(1e-14));
}

TEST_CASE("exact arithmetic helpers") {
  CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  CHECK(ExactSixJ::from_rational(Rational(-1, 3)) == exact(-1, 1, 9));
  CHECK(exact(-1, 1, 4) * exact(-1, 1, 9) == exact(1, 1, 36));
}

TEST_CASE("orbit invariance on random sextets") {
  std::mt19937_64 rng(0x5eed01);
  for (int trial = 0; trial < 60; ++trial) {
    const LabelSextet s = testing::random_admissible(rng, 14);
    const ExactSixJ v = sixj::sixj(s);
    for (const auto& t : symmetry_orbit(s)) CHECK(sixj::sixj(t) == v);
  }
}

TEST_CASE("orthogonality in the recoupling channel") {
  // sum_x (x+1) sqrt((f+1)(g+1)) {a b x; c d f}{a b x; c d g} = delta_{fg}
  // Every term is sqrt(K * rational^2) for one K, so sum in units of sqrt(K).
  const int a = 3, b = 4, c = 5, d = 4;
  for (int f = 0; f <= 10; ++f) {
    for (int g = 0; g <= 10; ++g) {
      std::vector<ExactSixJ> terms;
      for (int x = 0; x <= 12; ++x) {
        const auto u = sixj::sixj(LabelSextet::from_wigner(a, b, x, c, d, f));
        const auto v = sixj::sixj(LabelSextet::from_wigner(a, b, x, c, d, g));
        if (u.is_zero() || v.is_zero()) continue;
        terms.push_back(u * v * ExactSixJ(1, Rational((x + 1) * (x + 1) * (f + 1) * (g + 1))));
      }
      if (terms.empty()) continue;
      const Rational unit = terms.front().radicand();
      Rational total = 0;
      for (const auto& t : terms) {
        const auto root = exact_sqrt(t.radicand() / unit);
        REQUIRE(root.has_value());
        total += t.sign() * *root;
      }
      if (f == g) {
        const auto scale = exact_sqrt(unit);
        REQUIRE(scale.has_value());
        CHECK(total * *scale == 1);
      } else {
        CHECK(total == 0);
      }
    }
  }
}

TEST_CASE("pentagon identity on random labels") {
  std::mt19937_64 rng(0x5eed02);
  for (int trial = 0; trial < 25; ++trial) {
    const PentagonLabels L = random_pentagon(rng, 8);
    CHECK(pentagon_residual(L) == 0);
  }
}

TEST_CASE("concurrent evaluation agrees with serial") {
  std::vector<LabelSextet> inputs;
  std::mt19937_64 rng(0x5eed03);
  for (int i = 0; i < 200; ++i) inputs.push_back(testing::random_admissible(rng, 30));
  std::vector<ExactSixJ> serial;
  for (const auto& s : inputs) serial.push_back(sixj::sixj(s));
  std::vector<std::vector<ExactSixJ>> results(4);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < results.size(); ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        results[t].push_back(sixj::sixj(inputs[(i + t * 37) % inputs.size()]));
      }
    });
  }
  for (auto& th : pool) th.join();
  for (std::size_t t = 0; t < results.size(); ++t) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      CHECK(results[t][i] == serial[(i + t * 37) % inputs.size()]);
    }
  }
}
