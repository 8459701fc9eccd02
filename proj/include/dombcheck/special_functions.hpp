#pragma once

// Harmonic numbers, Fermat quotients, Bernoulli and Euler numbers mod p,
// and Morita's p-adic Gamma function.

#include <vector>

#include "dombcheck/padic.hpp"

namespace dombcheck {

/// H_n and H_n^(2) for n = 0..ceiling as PAdicValues. Built once, read-only.
class HarmonicCache {
 public:
  /// `ceiling` 0 picks 2p, enough for H_{2j} with j < p.
  explicit HarmonicCache(const PrimeContext& ctx, u64 ceiling = 0);

  const PrimeContext& context() const noexcept { return *ctx_; }
  u64 ceiling() const noexcept { return ceiling_; }

  /// H_n^(order) for order 1 or 2.
  const PAdicValue& get(u64 n, int order = 1) const;

 private:
  const PrimeContext* ctx_;
  u64 ceiling_;
  std::vector<PAdicValue> first_;
  std::vector<PAdicValue> second_;
};

/// Direct evaluation of H_n^(order) = sum_{k<=n} 1/k^order.
PAdicValue harmonic(u64 n, int order, const PrimeContext& ctx);

/// q_p(a) = (a^{p-1} - 1)/p, known mod p^K.
PAdicValue fermat_quotient(long long a, const PrimeContext& ctx);

/// Residues of B_0..B_{p-3} modulo p.
struct BernoulliTable {
  u64 prime = 0;
  std::vector<u64> residues;

  u64 operator[](std::size_t n) const { return residues.at(n); }
  std::size_t size() const noexcept { return residues.size(); }
};

BernoulliTable bernoulli_table(const PrimeContext& ctx);

/// B_n(x) mod p, n <= p-2. B_{p-2} is an odd-index Bernoulli number and vanishes.
u64 bernoulli_poly(u64 n, const Rational& x, const BernoulliTable& table);

/// Residues of the secant Euler numbers E_0..E_{p-3} modulo p (E_2 = -1).
struct EulerTable {
  u64 prime = 0;
  std::vector<u64> residues;

  u64 operator[](std::size_t n) const { return residues.at(n); }
  std::size_t size() const noexcept { return residues.size(); }
};

EulerTable euler_table(const PrimeContext& ctx);

/// Gamma_p(n) = (-1)^n prod_{1<=k<n, p∤k} k, with Gamma_p(0) = 1.
PAdicValue padic_gamma_int(u64 n, const PrimeContext& ctx);

/// Gamma_p(x) mod p for p-integral rational x.
u64 padic_gamma_rational(const Rational& x, const PrimeContext& ctx);

/// x mod p for a p-integral rational.
u64 residue_mod_p(const Rational& x, u64 p);

}  // namespace dombcheck
