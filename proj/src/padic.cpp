#include "dombcheck/padic.hpp"

#include <algorithm>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace dombcheck {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::NegativeValuation: return "NegativeValuation";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
    case ErrorKind::ArgumentDivisibleByP: return "ArgumentDivisibleByP";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::WrongPrimeClass: return "WrongPrimeClass";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PrecisionBudget: return "PrecisionBudget";
  }
  return "Unknown";
}

ArithmeticError::ArithmeticError(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

mpz_class to_mpz(u128 value) {
  mpz_class r = static_cast<unsigned long>(static_cast<u64>(value >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<u64>(value));
  return r;
}

u128 from_mpz(const mpz_class& value) {
  if (sgn(value) < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 128) {
    throw ArithmeticError(ErrorKind::InvalidArgument, "integer does not fit in 128 bits");
  }
  mpz_class hi = value >> 64;
  mpz_class lo = value - (hi << 64);
  return (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
}

namespace modarith {

u128 mul(u128 a, u128 b, u128 m) {
  if ((m >> 64) == 0) {
    return static_cast<u128>(static_cast<u64>(a)) * static_cast<u64>(b) % m;
  }
  using boost::multiprecision::uint256_t;
  uint256_t prod = uint256_t(a) * uint256_t(b);
  return static_cast<u128>(prod % uint256_t(m));
}

u128 pow(u128 base, u128 exp, u128 m) {
  u128 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul(result, base, m);
    base = mul(base, base, m);
    exp >>= 1;
  }
  return result;
}

u128 inverse(u128 a, u128 m) {
  i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    std::tie(old_r, r) = std::pair<i128, i128>(r, old_r - q * r);
    std::tie(old_s, s) = std::pair<i128, i128>(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw ArithmeticError(ErrorKind::DivisionByZero, "value is not invertible modulo " + to_string(m));
  }
  return reduce(old_s, m);
}

u128 reduce(i128 x, u128 m) {
  i128 r = x % static_cast<i128>(m);
  if (r < 0) r += static_cast<i128>(m);
  return static_cast<u128>(r);
}

}  // namespace modarith

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u128 x = modarith::pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = modarith::mul(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

PrimeContext::PrimeContext(u64 p, int precision, u64 table_bound)
    : p_(p), precision_(precision), table_bound_(table_bound ? table_bound : 3 * p + 3) {
  if (p <= 3 || !is_prime(p)) {
    throw ArithmeticError(ErrorKind::InvalidArgument, "expected a prime p > 3, got " + std::to_string(p));
  }
  if (precision < 1) {
    throw ArithmeticError(ErrorKind::InvalidArgument, "precision must be at least 1");
  }
  const u128 budget = static_cast<u128>(1) << kBudgetBits;
  powers_.reserve(precision + 1);
  powers_.push_back(1);
  for (int e = 1; e <= precision; ++e) {
    if (powers_.back() > budget / p) {
      throw ArithmeticError(ErrorKind::PrecisionBudget,
                            std::to_string(p) + "^" + std::to_string(precision) + " exceeds 2^126");
    }
    powers_.push_back(powers_.back() * p);
  }
  const u128 mod = modulus();
  inverses_.assign(table_bound_ + 1, 0);
  pfree_prefix_.assign(table_bound_ + 1, 1 % mod);
  for (u64 k = 1; k <= table_bound_; ++k) {
    if (k % p != 0) {
      inverses_[k] = modarith::inverse(k, mod);
      pfree_prefix_[k] = modarith::mul(pfree_prefix_[k - 1], k % mod, mod);
    } else {
      pfree_prefix_[k] = pfree_prefix_[k - 1];
    }
  }
}

u128 PrimeContext::power(int e) const {
  if (e < 0 || e > precision_) {
    throw ArithmeticError(ErrorKind::InvalidArgument, "power exponent outside [0, K]");
  }
  return powers_[e];
}

u128 PrimeContext::inverse(u64 k) const {
  if (k % p_ == 0) {
    throw ArithmeticError(ErrorKind::DivisionByZero, "inverse of a multiple of p");
  }
  if (k <= table_bound_) return inverses_[k];
  return modarith::inverse(k % modulus(), modulus());
}

u128 PrimeContext::pfree_product(u64 n) const {
  if (n <= table_bound_) return pfree_prefix_[n];
  const u128 mod = modulus();
  u128 acc = pfree_prefix_[table_bound_];
  for (u64 k = table_bound_ + 1; k <= n; ++k) {
    if (k % p_ != 0) acc = modarith::mul(acc, k % mod, mod);
  }
  return acc;
}

namespace {

int saturating_add(int a, int b) {
  if (a >= PAdicValue::kExact || b >= PAdicValue::kExact) return PAdicValue::kExact;
  return a + b;
}

void check_same_context(const PAdicValue& a, const PAdicValue& b) {
  if (&a.context() != &b.context()) {
    throw ArithmeticError(ErrorKind::InvalidArgument, "operands belong to different prime contexts");
  }
}

// Strips factors of p from a nonzero residue.
std::pair<int, u128> split_valuation(u128 r, u64 p) {
  int v = 0;
  while (r % p == 0) {
    r /= p;
    ++v;
  }
  return {v, r};
}

}  // namespace

PAdicValue::PAdicValue(const PrimeContext& ctx) : ctx_(&ctx) {}

PAdicValue::PAdicValue(const PrimeContext& ctx, int val, u128 unit, int prec)
    : ctx_(&ctx), zero_(false), val_(val), abs_(0), unit_(unit), prec_(prec) {}

PAdicValue PAdicValue::inexact_zero(const PrimeContext& ctx, int abs_prec) {
  PAdicValue z(ctx);
  z.abs_ = std::min(abs_prec, kExact);
  return z;
}

PAdicValue PAdicValue::from_int(i128 n, const PrimeContext& ctx) {
  if (n == 0) return PAdicValue(ctx);
  const i128 p = static_cast<i128>(ctx.prime());
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return PAdicValue(ctx, v, modarith::reduce(n, ctx.modulus()), ctx.precision());
}

PAdicValue PAdicValue::from_mpz(const mpz_class& n, const PrimeContext& ctx) {
  if (sgn(n) == 0) return PAdicValue(ctx);
  mpz_class rest;
  mpz_class p = static_cast<unsigned long>(ctx.prime());
  int v = static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
  mpz_class mod = to_mpz(ctx.modulus());
  mpz_class r;
  mpz_mod(r.get_mpz_t(), rest.get_mpz_t(), mod.get_mpz_t());
  return PAdicValue(ctx, v, dombcheck::from_mpz(r), ctx.precision());
}

PAdicValue PAdicValue::from_residue(u128 r, int abs_prec, const PrimeContext& ctx) {
  if (abs_prec < 1 || abs_prec > ctx.precision()) {
    throw ArithmeticError(ErrorKind::InvalidArgument, "residue precision outside [1, K]");
  }
  r %= ctx.power(abs_prec);
  if (r == 0) return inexact_zero(ctx, abs_prec);
  auto [v, u] = split_valuation(r, ctx.prime());
  return PAdicValue(ctx, v, u, abs_prec - v);
}

PAdicValue PAdicValue::from_parts(int valuation, u128 unit, const PrimeContext& ctx) {
  unit %= ctx.modulus();
  if (unit % ctx.prime() == 0) {
    throw ArithmeticError(ErrorKind::InvalidArgument, "unit part divisible by p");
  }
  return PAdicValue(ctx, valuation, unit, ctx.precision());
}

u128 PAdicValue::residue(int m) const {
  if (m < 0 || m > ctx_->precision()) {
    throw ArithmeticError(ErrorKind::InvalidArgument, "residue exponent outside [0, K]");
  }
  if (zero_) {
    if (abs_ < m) {
      throw ArithmeticError(ErrorKind::InsufficientPrecision,
                            "zero known mod p^" + std::to_string(abs_) + ", requested p^" + std::to_string(m));
    }
    return 0;
  }
  if (val_ < 0) {
    throw ArithmeticError(ErrorKind::NegativeValuation, "valuation " + std::to_string(val_));
  }
  if (val_ + prec_ < m) {
    throw ArithmeticError(ErrorKind::InsufficientPrecision,
                          "value known mod p^" + std::to_string(val_ + prec_) + ", requested p^" + std::to_string(m));
  }
  if (val_ >= m) return 0;
  const u128 mod = ctx_->power(m);
  return modarith::mul(unit_ % mod, ctx_->power(val_), mod);
}

PAdicValue PAdicValue::operator-() const {
  if (zero_) return *this;
  PAdicValue r = *this;
  r.unit_ = ctx_->power(prec_) - unit_;
  return r;
}

PAdicValue PAdicValue::inverse() const { return one(*ctx_) / *this; }

PAdicValue PAdicValue::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  PAdicValue result = one(*ctx_);
  PAdicValue base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

PAdicValue operator+(const PAdicValue& a, const PAdicValue& b) {
  check_same_context(a, b);
  const PrimeContext& ctx = a.context();
  const int n = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.zero_ && b.zero_) return PAdicValue::inexact_zero(ctx, n);
  if (a.zero_ || b.zero_) {
    const PAdicValue& x = a.zero_ ? b : a;
    if (n >= x.absolute_precision()) return x;
    if (n <= x.val_) return PAdicValue::inexact_zero(ctx, n);
    return PAdicValue(ctx, x.val_, x.unit_ % ctx.power(n - x.val_), n - x.val_);
  }
  const int v = std::min(a.val_, b.val_);
  if (n <= v) return PAdicValue::inexact_zero(ctx, n);
  const int digits = n - v;
  const u128 mod = ctx.power(digits);
  auto shifted = [&](const PAdicValue& x) -> u128 {
    const int shift = x.val_ - v;
    if (shift >= digits) return 0;
    return modarith::mul(x.unit_ % mod, ctx.power(shift), mod);
  };
  u128 s = shifted(a) + shifted(b);
  if (s >= mod) s -= mod;
  if (s == 0) return PAdicValue::inexact_zero(ctx, n);
  auto [t, u] = split_valuation(s, ctx.prime());
  return PAdicValue(ctx, v + t, u, digits - t);
}

PAdicValue operator-(const PAdicValue& a, const PAdicValue& b) { return a + (-b); }

PAdicValue operator*(const PAdicValue& a, const PAdicValue& b) {
  check_same_context(a, b);
  const PrimeContext& ctx = a.context();
  if (a.zero_ || b.zero_) {
    if (a.is_exact_zero() || b.is_exact_zero()) return PAdicValue(ctx);
    return PAdicValue::inexact_zero(ctx, saturating_add(a.valuation(), b.valuation()));
  }
  const int prec = std::min(a.prec_, b.prec_);
  const u128 mod = ctx.power(prec);
  return PAdicValue(ctx, a.val_ + b.val_, modarith::mul(a.unit_ % mod, b.unit_ % mod, mod), prec);
}

PAdicValue operator/(const PAdicValue& a, const PAdicValue& b) {
  check_same_context(a, b);
  const PrimeContext& ctx = a.context();
  if (b.zero_) throw ArithmeticError(ErrorKind::DivisionByZero, "division by zero");
  if (a.zero_) {
    if (a.is_exact_zero()) return PAdicValue(ctx);
    return PAdicValue::inexact_zero(ctx, a.abs_ - b.val_);
  }
  const int prec = std::min(a.prec_, b.prec_);
  const u128 mod = ctx.power(prec);
  const u128 inv = modarith::inverse(b.unit_ % mod, mod);
  return PAdicValue(ctx, a.val_ - b.val_, modarith::mul(a.unit_ % mod, inv, mod), prec);
}

std::string PAdicValue::debug_string() const {
  if (zero_) {
    return is_exact_zero() ? "0" : "O(p^" + std::to_string(abs_) + ")";
  }
  return "p^" + std::to_string(val_) + "*" + to_string(unit_) + " (prec " + std::to_string(prec_) + ")";
}

int valuation(const mpz_class& n, u64 p) {
  if (sgn(n) == 0) throw ArithmeticError(ErrorKind::InvalidArgument, "valuation of zero");
  mpz_class rest;
  mpz_class pp = static_cast<unsigned long>(p);
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

PAdicValue embed_rational(const Rational& q, const PrimeContext& ctx) {
  if (sgn(q) == 0) return PAdicValue::zero(ctx);
  PAdicValue num = PAdicValue::from_mpz(q.get_num(), ctx);
  PAdicValue den = PAdicValue::from_mpz(q.get_den(), ctx);
  return num / den;
}

FactorialParts factorial_decomposed(u64 n, const PrimeContext& ctx) {
  const u64 p = ctx.prime();
  const u128 mod = ctx.modulus();
  FactorialParts parts{0, 1 % mod};
  while (n > 0) {
    parts.unit = modarith::mul(parts.unit, ctx.pfree_product(n), mod);
    n /= p;
    parts.valuation += static_cast<long long>(n);
  }
  return parts;
}

PAdicValue binomial_int(long long n, long long k, const PrimeContext& ctx) {
  if (n < 0) throw ArithmeticError(ErrorKind::InvalidArgument, "binomial_int needs n >= 0");
  if (k < 0 || k > n) return PAdicValue::zero(ctx);
  const u128 mod = ctx.modulus();
  auto top = factorial_decomposed(static_cast<u64>(n), ctx);
  auto left = factorial_decomposed(static_cast<u64>(k), ctx);
  auto right = factorial_decomposed(static_cast<u64>(n - k), ctx);
  const u128 den = modarith::mul(left.unit, right.unit, mod);
  const u128 unit = modarith::mul(top.unit, modarith::inverse(den, mod), mod);
  return PAdicValue::from_parts(static_cast<int>(top.valuation - left.valuation - right.valuation), unit, ctx);
}

namespace {

// prod_{i<m} (num + sign*i*den) / den^m as a PAdicValue.
PAdicValue linear_product(const Rational& a, u64 m, int sign, const PrimeContext& ctx) {
  const mpz_class& num = a.get_num();
  const mpz_class& den = a.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), ctx.prime())) {
    throw ArithmeticError(ErrorKind::DenominatorDivisibleByP, "denominator of " + a.get_str() + " divisible by p");
  }
  const u64 p = ctx.prime();
  const u128 mod = ctx.modulus();
  long long val = 0;
  u128 unit = 1 % mod;
  if (num.fits_slong_p() && den.fits_slong_p() && m < (u64{1} << 40)) {
    const i128 n0 = num.get_si();
    const i128 d0 = den.get_si();
    for (u64 i = 0; i < m; ++i) {
      i128 t = n0 + sign * static_cast<i128>(i) * d0;
      if (t == 0) return PAdicValue::zero(ctx);
      while (t % static_cast<i128>(p) == 0) {
        t /= static_cast<i128>(p);
        ++val;
      }
      unit = modarith::mul(unit, modarith::reduce(t, mod), mod);
    }
    const u128 den_pow = modarith::pow(modarith::reduce(d0, mod), m, mod);
    unit = modarith::mul(unit, modarith::inverse(den_pow, mod), mod);
    return PAdicValue::from_parts(static_cast<int>(val), unit, ctx);
  }
  PAdicValue acc = PAdicValue::one(ctx);
  for (u64 i = 0; i < m; ++i) {
    Rational factor = a + Rational(sign * static_cast<long>(i));
    acc *= embed_rational(factor, ctx);
  }
  return acc;
}

}  // namespace

PAdicValue binomial_rational(const Rational& a, u64 m, const PrimeContext& ctx) {
  PAdicValue numer = linear_product(a, m, -1, ctx);
  if (numer.is_zero()) return numer;
  auto fact = factorial_decomposed(m, ctx);
  return numer / PAdicValue::from_parts(static_cast<int>(fact.valuation), fact.unit, ctx);
}

PAdicValue pochhammer(const Rational& a, u64 k, const PrimeContext& ctx) {
  return linear_product(a, k, +1, ctx);
}

int jacobi3(u64 p) {
  switch (p % 3) {
    case 1: return 1;
    case 2: return -1;
    default: throw ArithmeticError(ErrorKind::InvalidArgument, "jacobi3 needs p coprime to 3");
  }
}

}  // namespace dombcheck
