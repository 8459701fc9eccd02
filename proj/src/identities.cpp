#include "dombcheck/identities.hpp"

#include <array>
#include <atomic>
#include <functional>
#include <thread>

#include "dombcheck/domb_numbers.hpp"

namespace dombcheck {

namespace {

constexpr std::array<Identity, 17> kCatalog{
    Identity::I1,  Identity::I2,  Identity::I3,  Identity::I4,   Identity::I5,           Identity::I6,
    Identity::I7,  Identity::I8,  Identity::I9,  Identity::I10,  Identity::I11,          Identity::I12,
    Identity::I13, Identity::I14, Identity::CYID, Identity::CZ_TRANSFORM, Identity::SUN_TRANSFORM,
};

constexpr std::array<std::string_view, 17> kNames{
    "I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9", "I10", "I11", "I12", "I13", "I14",
    "CYID", "CZ_TRANSFORM", "SUN_TRANSFORM",
};

Rational binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Rational sign(long k) { return (k % 2 == 0) ? 1 : -1; }

// Harmonic numbers H_0..H_limit and H^(2).
class Harmonics {
 public:
  explicit Harmonics(long limit) : first_(limit + 1), second_(limit + 1) {
    for (long k = 1; k <= limit; ++k) {
      first_[k] = first_[k - 1] + q(1, k);
      second_[k] = second_[k - 1] + q(1, k * k);
    }
  }
  const Rational& h(long n) const { return first_.at(n); }
  const Rational& h2(long n) const { return second_.at(n); }

 private:
  std::vector<Rational> first_;
  std::vector<Rational> second_;
};

// prod_{k=1}^n f(k)
Rational product(long n, const std::function<Rational(long)>& f) {
  Rational r = 1;
  for (long k = 1; k <= n; ++k) r *= f(k);
  return r;
}

class Checker {
 public:
  Checker(Identity id, long max_n) {
    report_.id = id;
    report_.max_n = max_n;
  }

  void expect(long n, long j, const Rational& lhs, const Rational& rhs) {
    ++report_.cases;
    if (report_.pass && lhs != rhs) {
      report_.pass = false;
      report_.failure = IdentityFailure{n, j, lhs, rhs};
    }
  }

  IdentityReport finish() { return std::move(report_); }

 private:
  IdentityReport report_;
};

// Product of (3k-1)/(3k-2), cross-checked against (2/3)_n/(1/3)_n.
Rational third_ratio(Checker& c, long n, bool invert) {
  Rational prod = invert ? product(n, [](long k) -> Rational { return q(3 * k - 2, 3 * k - 1); })
                         : product(n, [](long k) -> Rational { return q(3 * k - 1, 3 * k - 2); });
  Rational poch = invert ? rational_pochhammer(q(1, 3), n) / rational_pochhammer(q(2, 3), n)
                         : rational_pochhammer(q(2, 3), n) / rational_pochhammer(q(1, 3), n);
  c.expect(n, -1, prod, poch);
  return prod;
}

// sum_{k=2j}^{n-1} w(k) C(k+j, 3j) or sum_{k=j}^{n-1} w(k) C(k+2j, 3j).
Rational binomial_tail(long n, long j, bool shifted, const std::function<Rational(long)>& w) {
  Rational s = 0;
  const long start = shifted ? j : 2 * j;
  for (long k = start; k < n; ++k) s += w(k) * binom(shifted ? k + 2 * j : k + j, 3 * j);
  return s;
}

void check_tails(Identity id, Checker& c, long max_n) {
  for (long n = 0; n <= max_n; ++n) {
    for (long j = 0; j <= n; ++j) {
      const Rational nj = n, jj = j;
      const Rational c1 = binom(n + j, 3 * j + 1);
      const Rational c2 = binom(n + 2 * j, 3 * j + 1);
      const Rational den = (3 * jj + 2) * (3 * jj + 3);
      switch (id) {
        case Identity::I1:
          c.expect(n, j, binomial_tail(n, j, false, [](long) -> Rational { return Rational(1); }), c1);
          break;
        case Identity::I6:
          c.expect(n, j, binomial_tail(n, j, false, [](long k) -> Rational { return Rational(3 * k + 2); }),
                   (3 * nj + 1) * (3 * jj + 1) / (3 * jj + 2) * c1);
          break;
        case Identity::I10:
          c.expect(n, j, binomial_tail(n, j, true, [](long k) -> Rational { return Rational(3 * k + 1); }),
                   (3 * nj - 1) * (3 * jj + 1) / (3 * jj + 2) * c2);
          break;
        case Identity::I11:
          c.expect(n, j, binomial_tail(n, j, false, [](long k) -> Rational { return Rational(k * k); }),
                   (1 - jj * jj - nj * (2 * jj + 3) * (3 * jj + 1) + nj * nj * (3 * jj + 1) * (3 * jj + 2)) / den *
                       c1);
          break;
        case Identity::I12:
          c.expect(n, j, binomial_tail(n, j, true, [](long k) -> Rational { return Rational(k * k); }),
                   (1 + 3 * jj + 2 * jj * jj - nj * (4 * jj + 3) * (3 * jj + 1) +
                    nj * nj * (3 * jj + 1) * (3 * jj + 2)) /
                       den * c2);
          break;
        case Identity::I13:
          c.expect(n, j, binomial_tail(n, j, false, [](long k) -> Rational { return Rational(k); }),
                   (3 * nj * jj + nj - jj - 1) / (3 * jj + 2) * c1);
          break;
        case Identity::I14:
          c.expect(n, j, binomial_tail(n, j, true, [](long k) -> Rational { return Rational(k); }),
                   (3 * nj * jj + nj - 2 * jj - 1) / (3 * jj + 2) * c2);
          break;
        default:
          break;
      }
    }
  }
}

// sum_k C(n,k) C(n+k,k) (-1)^k f(k)
Rational legendre_sum(long n, const std::function<Rational(long)>& f) {
  Rational s = 0;
  for (long k = 0; k <= n; ++k) s += binom(n, k) * binom(n + k, k) * sign(k) * f(k);
  return s;
}

void check_legendre(Identity id, Checker& c, long max_n, const Harmonics& h) {
  for (long n = 0; n <= max_n; ++n) {
    switch (id) {
      case Identity::I2: {
        const Rational lhs = legendre_sum(n, [&](long k) -> Rational { return (h.h(k) - h.h(2 * k)) / (3 * k + 1); });
        Rational inner = 0;
        for (long k = 1; k <= n; ++k) inner += q(1, k) * product(k, [](long i) -> Rational { return q(3 * i - 2, 3 * i - 1); });
        c.expect(n, 0, lhs, q(1, 3 * n + 1) * third_ratio(c, n, false) * inner);
        break;
      }
      case Identity::I5:
        c.expect(n, 0, legendre_sum(n, [](long k) -> Rational { return q(1, 3 * k + 1); }),
                 q(1, 3 * n + 1) * third_ratio(c, n, false));
        break;
      case Identity::I7:
        c.expect(n, 0, legendre_sum(n, [](long k) -> Rational { return q(1, 3 * k + 2); }),
                 q(1, 3 * n + 2) * third_ratio(c, n, true));
        break;
      case Identity::I8: {
        const Rational lhs = legendre_sum(n, [&](long k) -> Rational { return (h.h(2 * k) - h.h(k)) / (3 * k + 2); });
        Rational inner = 0;
        for (long k = 1; k <= n; ++k) inner += q(1, k) * product(k, [](long i) -> Rational { return q(3 * i - 1, 3 * i - 2); });
        c.expect(n, 0, lhs, -q(1, 3 * n + 2) * third_ratio(c, n, true) * inner);
        break;
      }
      default:
        break;
    }
  }
}

void check_fractional(Identity id, Checker& c, long max_n, const Harmonics& h) {
  for (long n = 0; n <= max_n; ++n) {
    switch (id) {
      case Identity::I3: {
        Rational lhs = 0, inner = 0;
        for (long r = 1; r <= n; ++r) {
          inner += q(1, r * (3 * r - 1));
          lhs += binom(n, r) * sign(r) / r * inner;
        }
        Rational tail = 0;
        for (long k = 1; k <= n; ++k) tail += sign(k) / (Rational(k * k) * rational_binomial(q(-2, 3), k));
        c.expect(n, 0, lhs, h.h2(n) - tail);
        break;
      }
      case Identity::I4: {
        Rational lhs = 0;
        for (long k = 1; k <= n; ++k) lhs += rational_binomial(q(-1, 3), 2 * n - k) * rational_binomial(q(-1, 3), k - 1);
        const Rational rhs =
            -q(3 * n, 6 * n - 1) * product(n, [](long k) -> Rational { return q((3 * k - 2) * (6 * k - 1), 9 * k * (2 * k - 1)); });
        c.expect(n, 0, lhs, rhs);
        break;
      }
      case Identity::I9: {
        Rational lhs = 0;
        for (long k = 1; k <= n; ++k) lhs += rational_binomial(q(-2, 3), 2 * n - k) * rational_binomial(q(-2, 3), k - 1);
        const Rational rhs =
            Rational(-3 * n) * product(n, [](long k) -> Rational { return q((3 * k - 1) * (6 * k - 5), 9 * k * (2 * k - 1)); });
        c.expect(n, 0, lhs, rhs);
        break;
      }
      default:
        break;
    }
  }
}

void check_cyid(Checker& c, long max_n) {
  for (long n = 0; n <= max_n; ++n) {
    for (long k = 0; k <= max_n; ++k) {
      Rational s = 0;
      for (long r = 0; r <= n; ++r) s += binom(n, r) * sign(r) / (k + r + 1);
      c.expect(n, k, 1 / binom(n + 1 + k, k), (n + 1) * s);
    }
  }
}

void check_transform(Identity id, Checker& c, long max_n) {
  for (long n = 0; n <= max_n; ++n) {
    const auto un = static_cast<unsigned>(n);
    const mpz_class rhs = id == Identity::CZ_TRANSFORM ? domb_via_cz(un) : domb_via_sun(un);
    c.expect(n, 0, Rational(domb_exact(un)), Rational(rhs));
  }
}

}  // namespace

std::span<const Identity> all_identities() { return kCatalog; }

std::string_view identity_name(Identity id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<Identity> parse_identity(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kCatalog[i];
  }
  return std::nullopt;
}

Rational rational_binomial(const Rational& a, long m) {
  Rational r = 1;
  for (long i = 0; i < m; ++i) r *= a - i;
  for (long i = 2; i <= m; ++i) r /= i;
  return r;
}

Rational rational_pochhammer(const Rational& a, long k) {
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= a + i;
  return r;
}

IdentityReport check(Identity id, long max_n) {
  if (max_n < 0) throw ArithmeticError(ErrorKind::InvalidArgument, "max_n must be non-negative");
  Checker c(id, max_n);
  switch (id) {
    case Identity::I1:
    case Identity::I6:
    case Identity::I10:
    case Identity::I11:
    case Identity::I12:
    case Identity::I13:
    case Identity::I14:
      check_tails(id, c, max_n);
      break;
    case Identity::I2:
    case Identity::I5:
    case Identity::I7:
    case Identity::I8:
      check_legendre(id, c, max_n, Harmonics(2 * max_n));
      break;
    case Identity::I3:
    case Identity::I4:
    case Identity::I9:
      check_fractional(id, c, max_n, Harmonics(max_n));
      break;
    case Identity::CYID:
      check_cyid(c, max_n);
      break;
    case Identity::CZ_TRANSFORM:
    case Identity::SUN_TRANSFORM:
      check_transform(id, c, max_n);
      break;
  }
  return c.finish();
}

std::vector<IdentityReport> check_all(long max_n, int workers) {
  std::vector<IdentityReport> out(kCatalog.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < kCatalog.size(); i = next++) out[i] = check(kCatalog[i], max_n);
  };
  std::vector<std::jthread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  return out;
}

}  // namespace dombcheck
