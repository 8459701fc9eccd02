#include "dombcheck/domb_numbers.hpp"

#include "dombcheck/power_series.hpp"

namespace dombcheck {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class pow_ui(long base, unsigned long e) {
  mpz_class b = base;
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

mpz_class domb_exact(unsigned n) {
  mpz_class sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    mpz_class c = binom(n, k);
    sum += c * c * binom(2 * k, k) * binom(2 * (n - k), n - k);
  }
  return sum;
}

std::vector<mpz_class> domb_exact_range(unsigned n) {
  std::vector<mpz_class> out;
  out.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) out.push_back(domb_exact(k));
  return out;
}

mpz_class domb_via_cz(unsigned n) {
  mpz_class sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    mpz_class c = binom(2 * k, k);
    mpz_class term = binom(n + 2 * k, 3 * k) * c * c * binom(3 * k, k) * pow_ui(16, n - k);
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

mpz_class domb_via_sun(unsigned n) {
  mpz_class sum = 0;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    mpz_class c = binom(2 * k, k);
    sum += binom(n + k, 3 * k) * c * c * binom(3 * k, k) * pow_ui(4, n - 2 * k);
  }
  return sum;
}

DombTable::DombTable(const PrimeContext& ctx) : ctx_(&ctx) {
  const u64 p = ctx.prime();
  const u128 mod = ctx.modulus();
  // For k < p every C(k, j) is a unit, so C(k,j)^2 = k!^2 / (j!^2 (k-j)!^2)
  // and D_k = k!^2 * sum_j w_j w_{k-j} with w_j = C(2j, j) / j!^2.
  std::vector<u128> fact(p), weight(p);
  fact[0] = 1 % mod;
  for (u64 k = 1; k < p; ++k) fact[k] = modarith::mul(fact[k - 1], k, mod);
  for (u64 j = 0; j < p; ++j) {
    const u128 central = binomial_int(2 * j, j, ctx).residue(ctx.precision());
    const u128 inv_fact = modarith::inverse(fact[j], mod);
    weight[j] = modarith::mul(central, modarith::mul(inv_fact, inv_fact, mod), mod);
  }
  residues_.resize(p);
  const bool narrow = (mod >> 64) == 0;
  for (u64 k = 0; k < p; ++k) {
    u128 acc = 0;
    if (narrow) {
      const u64 m = static_cast<u64>(mod);
      for (u64 j = 0; j <= k; ++j) {
        acc += static_cast<u128>(static_cast<u64>(weight[j])) * static_cast<u64>(weight[k - j]) % m;
      }
      acc %= m;
    } else {
      for (u64 j = 0; j <= k; ++j) {
        acc += modarith::mul(weight[j], weight[k - j], mod);
        if (acc >= mod) acc -= mod;
      }
    }
    residues_[k] = modarith::mul(modarith::mul(fact[k], fact[k], mod), acc, mod);
  }
}

PAdicValue DombTable::value(std::size_t k) const {
  return PAdicValue::from_residue(residues_.at(k), ctx_->precision(), *ctx_);
}

SeriesReport rogers_series_check(unsigned n) {
  const std::size_t order = n + 1;
  SeriesReport report;
  report.order = n;

  PowerSeries one_minus_4u = PowerSeries::constant(order, 1);
  if (order > 1) one_minus_4u[1] = -4;
  const PowerSeries geometric = one_minus_4u.inverse();

  // g = u^2 / (1-4u)^3
  PowerSeries u2(order);
  if (order > 2) u2[2] = 1;
  const PowerSeries g = u2 * geometric * geometric * geometric;

  PowerSeries inner(order);
  PowerSeries g_power = PowerSeries::constant(order, 1);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    mpz_class c = binom(2 * k, k);
    PowerSeries term = g_power;
    term *= Rational(c * c * binom(3 * k, k));
    inner += term;
    g_power = g_power * g;
  }
  const PowerSeries rhs = geometric * inner;

  report.coefficients = rhs.coefficients();
  report.pass = true;
  for (unsigned i = 0; i <= n; ++i) {
    if (rhs[i] != Rational(domb_exact(i))) {
      report.pass = false;
      report.first_mismatch = i;
      break;
    }
  }
  return report;
}

IntegralityReport liu_integrality_check(unsigned n) {
  IntegralityReport report;
  report.max_n = n;
  report.pass = true;
  const auto d = domb_exact_range(n);
  for (unsigned m = 1; m <= n; ++m) {
    mpz_class plus = 0, minus = 0;
    for (unsigned k = 0; k < m; ++k) {
      mpz_class weighted = (2 * k + 1) * d[k];
      plus += weighted * pow_ui(8, m - 1 - k);
      minus += weighted * pow_ui(-8, m - 1 - k);
    }
    Rational a(plus, m), b(minus, m);
    a.canonicalize();
    b.canonicalize();
    report.plus_values.push_back(a);
    report.minus_values.push_back(b);
    const bool ok = a.get_den() == 1 && b.get_den() == 1 && sgn(a) > 0 && sgn(b) > 0;
    if (!ok && report.pass) {
      report.pass = false;
      report.first_failure = m;
    }
  }
  return report;
}

}  // namespace dombcheck
