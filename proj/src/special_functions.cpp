#include "dombcheck/special_functions.hpp"

namespace dombcheck {

namespace {

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 invmod(u64 a, u64 p) { return static_cast<u64>(modarith::inverse(a, p)); }

// Row of binomials C(n, 0..n) mod p for n < p.
std::vector<u64> binomial_row(u64 n, const std::vector<u64>& fact, const std::vector<u64>& inv_fact, u64 p) {
  std::vector<u64> row(n + 1);
  for (u64 k = 0; k <= n; ++k) row[k] = mulmod(fact[n], mulmod(inv_fact[k], inv_fact[n - k], p), p);
  return row;
}

struct FactorialTables {
  std::vector<u64> fact;
  std::vector<u64> inv_fact;
};

FactorialTables factorials_mod_p(u64 limit, u64 p) {
  FactorialTables t;
  t.fact.assign(limit + 1, 1);
  t.inv_fact.assign(limit + 1, 1);
  for (u64 k = 1; k <= limit; ++k) t.fact[k] = mulmod(t.fact[k - 1], k, p);
  t.inv_fact[limit] = invmod(t.fact[limit], p);
  for (u64 k = limit; k > 0; --k) t.inv_fact[k - 1] = mulmod(t.inv_fact[k], k, p);
  return t;
}

}  // namespace

HarmonicCache::HarmonicCache(const PrimeContext& ctx, u64 ceiling)
    : ctx_(&ctx), ceiling_(ceiling ? ceiling : 2 * ctx.prime()) {
  first_.reserve(ceiling_ + 1);
  second_.reserve(ceiling_ + 1);
  first_.push_back(PAdicValue::zero(ctx));
  second_.push_back(PAdicValue::zero(ctx));
  const PAdicValue one = PAdicValue::one(ctx);
  for (u64 n = 1; n <= ceiling_; ++n) {
    PAdicValue term = one / PAdicValue::from_int(n, ctx);
    first_.push_back(first_.back() + term);
    second_.push_back(second_.back() + term * term);
  }
}

const PAdicValue& HarmonicCache::get(u64 n, int order) const {
  if (n > ceiling_) {
    throw ArithmeticError(ErrorKind::InvalidArgument,
                          "harmonic index " + std::to_string(n) + " above cache ceiling " + std::to_string(ceiling_));
  }
  switch (order) {
    case 1: return first_[n];
    case 2: return second_[n];
    default: throw ArithmeticError(ErrorKind::InvalidArgument, "harmonic order must be 1 or 2");
  }
}

PAdicValue harmonic(u64 n, int order, const PrimeContext& ctx) {
  if (order < 1) throw ArithmeticError(ErrorKind::InvalidArgument, "harmonic order must be positive");
  PAdicValue sum = PAdicValue::zero(ctx);
  const PAdicValue one = PAdicValue::one(ctx);
  for (u64 k = 1; k <= n; ++k) sum += one / PAdicValue::from_int(k, ctx).pow(order);
  return sum;
}

PAdicValue fermat_quotient(long long a, const PrimeContext& ctx) {
  const u64 p = ctx.prime();
  if (a % static_cast<long long>(p) == 0) {
    throw ArithmeticError(ErrorKind::ArgumentDivisibleByP, "fermat_quotient of a multiple of p");
  }
  mpz_class mod = to_mpz(ctx.modulus()) * static_cast<unsigned long>(p);
  mpz_class base = static_cast<long>(a);
  mpz_class power;
  mpz_powm_ui(power.get_mpz_t(), base.get_mpz_t(), p - 1, mod.get_mpz_t());
  power -= 1;
  if (sgn(power) < 0) power += mod;
  // power is divisible by p by Fermat's little theorem.
  mpz_class q = power / static_cast<unsigned long>(p);
  return PAdicValue::from_mpz(q, ctx);
}

BernoulliTable bernoulli_table(const PrimeContext& ctx) {
  const u64 p = ctx.prime();
  const u64 top = p - 3;
  BernoulliTable table;
  table.prime = p;
  table.residues.assign(top + 1, 0);
  table.residues[0] = 1;
  auto f = factorials_mod_p(p - 1, p);
  // (n+1) B_n = -sum_{k<n} C(n+1, k) B_k; n+1 <= p-2 keeps the division legal.
  for (u64 n = 1; n <= top; ++n) {
    if (n >= 3 && n % 2 == 1) continue;
    auto row = binomial_row(n + 1, f.fact, f.inv_fact, p);
    u64 acc = 0;
    for (u64 k = 0; k < n; ++k) acc = (acc + mulmod(row[k], table.residues[k], p)) % p;
    table.residues[n] = mulmod((p - acc) % p, invmod(n + 1, p), p);
  }
  return table;
}

u64 residue_mod_p(const Rational& x, u64 p) {
  if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), p)) {
    throw ArithmeticError(ErrorKind::DenominatorDivisibleByP, "denominator of " + x.get_str() + " divisible by p");
  }
  const u64 num = mpz_fdiv_ui(x.get_num().get_mpz_t(), p);
  const u64 den = mpz_fdiv_ui(x.get_den().get_mpz_t(), p);
  return mulmod(num, invmod(den, p), p);
}

u64 bernoulli_poly(u64 n, const Rational& x, const BernoulliTable& table) {
  const u64 p = table.prime;
  const u64 xr = residue_mod_p(x, p);
  if (n + 2 > p) throw ArithmeticError(ErrorKind::InvalidArgument, "bernoulli_poly index above p-2");
  auto f = factorials_mod_p(n, p);
  auto row = binomial_row(n, f.fact, f.inv_fact, p);
  // Horner-free: sum_k C(n,k) B_k x^{n-k}, skipping B_k = 0 for odd k >= 3 (covers k = p-2).
  std::vector<u64> xpow(n + 1, 1);
  for (u64 i = 1; i <= n; ++i) xpow[i] = mulmod(xpow[i - 1], xr, p);
  u64 acc = 0;
  for (u64 k = 0; k <= n; ++k) {
    if (k >= 3 && k % 2 == 1) continue;
    acc = (acc + mulmod(row[k], mulmod(table[k], xpow[n - k], p), p)) % p;
  }
  return acc;
}

EulerTable euler_table(const PrimeContext& ctx) {
  const u64 p = ctx.prime();
  const u64 top = p - 3;
  EulerTable table;
  table.prime = p;
  table.residues.assign(top + 1, 0);
  table.residues[0] = 1;
  auto f = factorials_mod_p(top, p);
  for (u64 n = 2; n <= top; n += 2) {
    auto row = binomial_row(n, f.fact, f.inv_fact, p);
    u64 acc = 0;
    for (u64 j = 0; j < n; j += 2) acc = (acc + mulmod(row[j], table.residues[j], p)) % p;
    table.residues[n] = (p - acc) % p;
  }
  return table;
}

PAdicValue padic_gamma_int(u64 n, const PrimeContext& ctx) {
  if (n == 0) return PAdicValue::one(ctx);
  PAdicValue prod = PAdicValue::from_parts(0, ctx.pfree_product(n - 1), ctx);
  return (n % 2 == 1) ? -prod : prod;
}

u64 padic_gamma_rational(const Rational& x, const PrimeContext& ctx) {
  const u64 p = ctx.prime();
  u64 m = residue_mod_p(x, p);
  if (m == 0) m = p;
  return static_cast<u64>(padic_gamma_int(m, ctx).residue(1));
}

}  // namespace dombcheck
