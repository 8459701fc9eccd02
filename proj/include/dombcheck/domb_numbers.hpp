#pragma once

// Domb numbers D_n = sum_k C(n,k)^2 C(2k,k) C(2n-2k,n-k), exactly and mod p^K.

#include <optional>
#include <vector>

#include "dombcheck/padic.hpp"

namespace dombcheck {

mpz_class domb_exact(unsigned n);
/// D_0..D_n.
std::vector<mpz_class> domb_exact_range(unsigned n);

/// Chan-Zudilin form: sum_k (-1)^k C(n+2k,3k) C(2k,k)^2 C(3k,k) 16^{n-k}.
mpz_class domb_via_cz(unsigned n);
/// Sun's form: sum_{k<=n/2} C(n+k,3k) C(2k,k)^2 C(3k,k) 4^{n-2k}.
mpz_class domb_via_sun(unsigned n);

/// Residues of D_0..D_{p-1} modulo p^K.
class DombTable {
 public:
  explicit DombTable(const PrimeContext& ctx);

  const PrimeContext& context() const noexcept { return *ctx_; }
  std::size_t size() const noexcept { return residues_.size(); }
  u128 operator[](std::size_t k) const { return residues_.at(k); }
  PAdicValue value(std::size_t k) const;

 private:
  const PrimeContext* ctx_;
  std::vector<u128> residues_;
};

inline DombTable domb_table_mod(const PrimeContext& ctx) { return DombTable(ctx); }

struct SeriesReport {
  unsigned order = 0;
  bool pass = false;
  std::optional<unsigned> first_mismatch;
  std::vector<Rational> coefficients;  // right-hand side, D_0..D_order expected
};

/// Expands (1-4u)^{-1} sum_k C(2k,k)^2 C(3k,k) (u^2/(1-4u)^3)^k to u^N and
/// compares with D_0..D_N.
SeriesReport rogers_series_check(unsigned n);

struct IntegralityReport {
  unsigned max_n = 0;
  bool pass = false;
  std::optional<unsigned> first_failure;
  std::vector<Rational> plus_values;   // (1/n) sum (2k+1) D_k 8^{n-1-k}
  std::vector<Rational> minus_values;  // same with (-8)
};

IntegralityReport liu_integrality_check(unsigned n);

}  // namespace dombcheck
