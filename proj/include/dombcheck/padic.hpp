#pragma once

// Valuation-aware arithmetic in Z_p truncated at p^K.
//
// A nonzero PAdicValue is p^v * u with u a unit known modulo p^prec. Zeros
// carry the absolute precision to which they are known (exact zeros carry
// kExact). Every operation propagates precision, and extracting a residue
// beyond what is known throws instead of truncating silently.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dombcheck {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Canonical representative of a residue class modulo some p^m.
using Residue = u128;

/// Exact rationals, always in lowest terms with positive denominator.
using Rational = mpq_class;

enum class ErrorKind {
  InsufficientPrecision,
  NegativeValuation,
  DivisionByZero,
  DenominatorDivisibleByP,
  ArgumentDivisibleByP,
  NotRepresentable,
  WrongPrimeClass,
  InvalidArgument,
  PrecisionBudget,
};

const char* to_string(ErrorKind kind);

class ArithmeticError : public std::runtime_error {
 public:
  ArithmeticError(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

std::string to_string(u128 value);
mpz_class to_mpz(u128 value);
/// Requires 0 <= value < 2^128.
u128 from_mpz(const mpz_class& value);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

namespace modarith {

/// a*b mod m for a, b < m < 2^127.
u128 mul(u128 a, u128 b, u128 m);
u128 pow(u128 base, u128 exp, u128 m);
/// Inverse of a modulo m; throws DivisionByZero when gcd(a, m) != 1.
u128 inverse(u128 a, u128 m);
/// x mod m for signed x, result in [0, m).
u128 reduce(i128 x, u128 m);

}  // namespace modarith

/// A prime p > 3 together with the working precision K and cached tables.
///
/// Immutable after construction. Every PAdicValue keeps a pointer to its
/// context, so the context must outlive the values built from it.
class PrimeContext {
 public:
  /// Largest exponent with p^K below this bound is accepted.
  static constexpr int kBudgetBits = 126;

  /// `table_bound` controls the inverse and p-free product tables; 0 picks 3p+3.
  PrimeContext(u64 p, int precision, u64 table_bound = 0);

  u64 prime() const noexcept { return p_; }
  int precision() const noexcept { return precision_; }

  /// p^e for 0 <= e <= K.
  u128 power(int e) const;
  u128 modulus() const noexcept { return powers_.back(); }
  u64 table_bound() const noexcept { return table_bound_; }

  /// 1/k mod p^K for p not dividing k.
  u128 inverse(u64 k) const;

  /// Product of all 1 <= k <= n with p not dividing k, mod p^K.
  u128 pfree_product(u64 n) const;

 private:
  u64 p_;
  int precision_;
  u64 table_bound_;
  std::vector<u128> powers_;
  std::vector<u128> inverses_;
  std::vector<u128> pfree_prefix_;
};

class PAdicValue {
 public:
  /// Absolute precision carried by exact zeros.
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  /// Exact zero.
  explicit PAdicValue(const PrimeContext& ctx);

  static PAdicValue zero(const PrimeContext& ctx) { return PAdicValue(ctx); }
  static PAdicValue one(const PrimeContext& ctx) { return from_int(1, ctx); }
  static PAdicValue from_int(i128 n, const PrimeContext& ctx);
  static PAdicValue from_mpz(const mpz_class& n, const PrimeContext& ctx);
  /// The value known only modulo p^abs_prec (r taken mod p^abs_prec).
  static PAdicValue from_residue(u128 r, int abs_prec, const PrimeContext& ctx);
  /// p^v * unit with unit reduced mod p^K; throws if p divides unit.
  static PAdicValue from_parts(int valuation, u128 unit, const PrimeContext& ctx);

  const PrimeContext& context() const noexcept { return *ctx_; }
  bool is_zero() const noexcept { return zero_; }
  bool is_exact_zero() const noexcept { return zero_ && abs_ == kExact; }

  /// For zeros this is the absolute precision (a lower bound on the valuation).
  int valuation() const noexcept { return zero_ ? abs_ : val_; }
  u128 unit() const noexcept { return unit_; }
  /// Relative precision in digits; 0 for zeros.
  int precision() const noexcept { return zero_ ? 0 : prec_; }
  /// The value is known modulo p^absolute_precision().
  int absolute_precision() const noexcept { return zero_ ? abs_ : val_ + prec_; }

  /// Canonical representative modulo p^m in [0, p^m).
  u128 residue(int m) const;

  PAdicValue operator-() const;
  PAdicValue inverse() const;
  PAdicValue pow(long long e) const;

  friend PAdicValue operator+(const PAdicValue& a, const PAdicValue& b);
  friend PAdicValue operator-(const PAdicValue& a, const PAdicValue& b);
  friend PAdicValue operator*(const PAdicValue& a, const PAdicValue& b);
  friend PAdicValue operator/(const PAdicValue& a, const PAdicValue& b);

  PAdicValue& operator+=(const PAdicValue& b) { return *this = *this + b; }
  PAdicValue& operator-=(const PAdicValue& b) { return *this = *this - b; }
  PAdicValue& operator*=(const PAdicValue& b) { return *this = *this * b; }
  PAdicValue& operator/=(const PAdicValue& b) { return *this = *this / b; }

  std::string debug_string() const;

 private:
  PAdicValue(const PrimeContext& ctx, int val, u128 unit, int prec);
  static PAdicValue inexact_zero(const PrimeContext& ctx, int abs_prec);

  const PrimeContext* ctx_;
  bool zero_ = true;
  int val_ = 0;   // valuation, nonzero values only
  int abs_ = kExact;  // absolute precision, zeros only
  u128 unit_ = 0;
  int prec_ = 0;
};

/// p-adic valuation of a nonzero integer.
int valuation(const mpz_class& n, u64 p);

PAdicValue embed_rational(const Rational& q, const PrimeContext& ctx);

struct FactorialParts {
  long long valuation;
  u128 unit;  // n! / p^valuation mod p^K
};

FactorialParts factorial_decomposed(u64 n, const PrimeContext& ctx);

/// C(n, k) with exact valuation; zero when k < 0 or k > n.
PAdicValue binomial_int(long long n, long long k, const PrimeContext& ctx);

/// Generalized binomial prod_{i<m}(a-i) / m!.
PAdicValue binomial_rational(const Rational& a, u64 m, const PrimeContext& ctx);

/// Rising factorial (a)_k = a(a+1)...(a+k-1).
PAdicValue pochhammer(const Rational& a, u64 k, const PrimeContext& ctx);

/// The symbol (p/3) for a prime p > 3.
int jacobi3(u64 p);

}  // namespace dombcheck
