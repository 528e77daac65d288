#include "sixj/oracle.hpp"

#include "sixj/error.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sixj {
namespace {

constexpr int kMaxCap = 200;

std::vector<int> primes_upto(int n) {
  std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
  std::vector<int> out;
  for (int p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (long q = static_cast<long>(p) * p; q <= n; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

// q * sqrt(prod of primes whose bit is set in key).
struct Surd {
  Rational coeff;
  std::uint64_t key = 0;
};

// Exact element of the multiquadratic field Q(sqrt 2, sqrt 3, sqrt 5, ...),
// kept as surds with distinct keys sorted by key.
class Multiquadratic {
 public:
  void add(const Surd& s) {
    if (s.coeff == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s.key,
                               [](const Surd& t, std::uint64_t k) { return t.key < k; });
    if (it != terms_.end() && it->key == s.key) {
      it->coeff += s.coeff;
      if (it->coeff == 0) terms_.erase(it);
    } else {
      terms_.insert(it, s);
    }
  }
  const std::vector<Surd>& terms() const { return terms_; }

 private:
  std::vector<Surd> terms_;
};

}  // namespace

struct SixjOracle::Impl {
  std::vector<int> primes;
  // factorial_exponents[n][i]: exponent of primes[i] in n!
  std::vector<std::vector<int>> factorial_exponents;
  std::vector<Integer> factorials;
  std::unordered_map<std::uint64_t, Surd> cg_cache;

  explicit Impl(int cap) {
    const int nmax = (3 * cap) / 2 + 2;
    primes = primes_upto(nmax);
    if (primes.size() > 64) throw std::logic_error("oracle prime table exceeds 64 bits");
    factorials.push_back(Integer(1));
    factorial_exponents.emplace_back(primes.size(), 0);
    for (int n = 1; n <= nmax; ++n) {
      factorials.push_back(factorials.back() * n);
      std::vector<int> e = factorial_exponents.back();
      int m = n;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        while (m % primes[i] == 0) {
          m /= primes[i];
          ++e[i];
        }
      }
      factorial_exponents.push_back(std::move(e));
    }
  }

  void add_factorial(std::vector<int>& e, int n, int sign) const {
    const auto& f = factorial_exponents[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += sign * f[i];
  }

  void add_integer(std::vector<int>& e, int n, int sign) const {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      while (n % primes[i] == 0) {
        n /= primes[i];
        e[i] += sign;
      }
    }
    if (n != 1) throw std::logic_error("oracle integer outside prime table");
  }

  // rational * sqrt(prod p^e) as a surd.
  Surd make_surd(Rational rational, const std::vector<int>& e) const {
    Surd s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const int half = e[i] >= 0 ? e[i] / 2 : -((-e[i] + 1) / 2);
      const int odd = e[i] - 2 * half;
      Integer p_half = boost::multiprecision::pow(Integer(primes[i]), static_cast<unsigned>(std::abs(half)));
      if (half >= 0) {
        rational *= p_half;
      } else {
        rational /= p_half;
      }
      if (odd) s.key |= std::uint64_t{1} << i;
    }
    s.coeff = std::move(rational);
    return s;
  }

  Surd multiply(const Surd& x, const Surd& y) const {
    Surd out{x.coeff * y.coeff, x.key ^ y.key};
    if (out.coeff == 0) return out;
    const std::uint64_t shared = x.key & y.key;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (shared & (std::uint64_t{1} << i)) out.coeff *= primes[i];
    }
    return out;
  }

  // <a/2 ma/2, b/2 mb/2 | c/2 (ma+mb)/2>, all arguments doubled.
  const Surd& clebsch_gordan(int a, int ma, int b, int mb, int c) {
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 36) |
                              (static_cast<std::uint64_t>(ma + 256) << 27) |
                              (static_cast<std::uint64_t>(b) << 18) |
                              (static_cast<std::uint64_t>(mb + 256) << 9) |
                              static_cast<std::uint64_t>(c);
    if (auto it = cg_cache.find(key); it != cg_cache.end()) return it->second;
    return cg_cache.emplace(key, compute_cg(a, ma, b, mb, c)).first->second;
  }

  Surd compute_cg(int a, int ma, int b, int mb, int c) const {
    const int mc = ma + mb;
    const bool valid = std::abs(ma) <= a && std::abs(mb) <= b && std::abs(mc) <= c &&
                       (a - ma) % 2 == 0 && (b - mb) % 2 == 0 && (c - mc) % 2 == 0 &&
                       c <= a + b && a <= b + c && b <= a + c && (a + b + c) % 2 == 0;
    if (!valid) return Surd{};

    std::vector<int> e(primes.size(), 0);
    add_integer(e, c + 1, +1);
    add_factorial(e, (c + a - b) / 2, +1);
    add_factorial(e, (c - a + b) / 2, +1);
    add_factorial(e, (a + b - c) / 2, +1);
    add_factorial(e, (a + b + c) / 2 + 1, -1);
    add_factorial(e, (c + mc) / 2, +1);
    add_factorial(e, (c - mc) / 2, +1);
    add_factorial(e, (a - ma) / 2, +1);
    add_factorial(e, (a + ma) / 2, +1);
    add_factorial(e, (b - mb) / 2, +1);
    add_factorial(e, (b + mb) / 2, +1);

    const int n1 = (a + b - c) / 2;
    const int n2 = (a - ma) / 2;
    const int n3 = (b + mb) / 2;
    const int n4 = (c - b + ma) / 2;
    const int n5 = (c - a - mb) / 2;
    const int kmin = std::max({0, -n4, -n5});
    const int kmax = std::min({n1, n2, n3});
    Rational sum(0);
    for (int k = kmin; k <= kmax; ++k) {
      const Integer den = factorials[static_cast<std::size_t>(k)] *
                          factorials[static_cast<std::size_t>(n1 - k)] *
                          factorials[static_cast<std::size_t>(n2 - k)] *
                          factorials[static_cast<std::size_t>(n3 - k)] *
                          factorials[static_cast<std::size_t>(n4 + k)] *
                          factorials[static_cast<std::size_t>(n5 + k)];
      sum += Rational(k % 2 == 0 ? 1 : -1, den);
    }
    return make_surd(std::move(sum), e);
  }

  ExactSixJ evaluate(const LabelSextet& s) {
    const int a = s.a(), b = s.b(), c = s.c(), d = s.d(), e = s.e(), f = s.f();
    // Couple (a b) -> e, (e d) -> c against (b d) -> f, (a f) -> c, in the
    // highest-weight state of the total spin c.
    const int M = c;
    Multiquadratic overlap;
    for (int ma = -a; ma <= a; ma += 2) {
      for (int mb = -b; mb <= b; mb += 2) {
        const int md = M - ma - mb;
        if (std::abs(md) > d || (d - md) % 2 != 0) continue;
        const Surd& c1 = clebsch_gordan(a, ma, b, mb, e);
        if (c1.coeff == 0) continue;
        const Surd& c2 = clebsch_gordan(e, ma + mb, d, md, c);
        if (c2.coeff == 0) continue;
        const Surd& c3 = clebsch_gordan(b, mb, d, md, f);
        if (c3.coeff == 0) continue;
        const Surd& c4 = clebsch_gordan(a, ma, f, mb + md, c);
        if (c4.coeff == 0) continue;
        overlap.add(multiply(multiply(c1, c2), multiply(c3, c4)));
      }
    }
    if (overlap.terms().empty()) return {};
    if (overlap.terms().size() != 1) {
      throw std::logic_error("recoupling overlap is not a single surd");
    }
    if ((a + b + c + d) % 2 != 0) throw std::logic_error("nonzero overlap with odd phase");

    // 6j = (-1)^{(a+b+c+d)/2} overlap / sqrt((e+1)(f+1))
    std::vector<int> norm(primes.size(), 0);
    add_integer(norm, e + 1, -1);
    add_integer(norm, f + 1, -1);
    Surd value = multiply(overlap.terms().front(), make_surd(Rational(1), norm));
    if (((a + b + c + d) / 2) % 2 != 0) value.coeff = -value.coeff;

    Rational radicand = value.coeff * value.coeff;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (value.key & (std::uint64_t{1} << i)) radicand *= primes[i];
    }
    return ExactSixJ(value.coeff > 0 ? 1 : -1, std::move(radicand));
  }
};

SixjOracle::SixjOracle(int label_cap) : label_cap_(label_cap) {
  if (label_cap < 0 || label_cap > kMaxCap) {
    throw Error(ErrorKind::kInvalidArgument,
                "oracle label cap must be in [0, " + std::to_string(kMaxCap) + "]");
  }
  impl_ = std::make_unique<Impl>(label_cap);
}

SixjOracle::~SixjOracle() = default;
SixjOracle::SixjOracle(SixjOracle&&) noexcept = default;
SixjOracle& SixjOracle::operator=(SixjOracle&&) noexcept = default;

ExactSixJ SixjOracle::operator()(const LabelSextet& s) {
  if (s.max_label() > label_cap_) {
    throw Error(ErrorKind::kBoundExceeded, "oracle label cap is " + std::to_string(label_cap_));
  }
  return impl_->evaluate(s);
}

ExactSixJ sixj_oracle(const LabelSextet& s, int label_cap) {
  thread_local std::unordered_map<int, SixjOracle> oracles;
  auto it = oracles.find(label_cap);
  if (it == oracles.end()) it = oracles.emplace(label_cap, SixjOracle(label_cap)).first;
  return it->second(s);
}

}  // namespace sixj
