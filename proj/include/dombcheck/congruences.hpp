#pragma once

// Both sides of every Domb-number supercongruence, evaluated per prime.
//
// Left-hand sides only ever touch the DombTable and geometric weights. The
// right-hand sides are closed forms in x^2, binomials, Fermat quotients and
// Bernoulli/Euler residues. The two paths share nothing beyond PAdicValue.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dombcheck/domb_numbers.hpp"
#include "dombcheck/padic.hpp"
#include "dombcheck/special_functions.hpp"

namespace dombcheck {

enum class Target {
  THM11_4K,
  THM11_16K,
  THM12_4K,
  THM12_16K,
  THM13_K2_4K,
  THM13_K2_16K,
  THM13_K_4K,
  THM13_K_16K,
  CONJ1_DP1,
  CONJ2_MODP2,
  MUSUN_P5,
  LEMMA22,
  LEMMA_MPT,
  LEMMA_P2J,
  LEMMA_SUNH,
  LEMMA_SH55,
};

enum class PrimeClass { Any, OneMod3, TwoMod3 };

struct TargetInfo {
  Target id;
  std::string_view name;
  /// Largest modulus exponent the target checks at (p = 1 and p = 2 mod 3 may differ).
  int max_exponent;
  PrimeClass applies_to;
  u64 min_prime;
  u64 default_cap;
};

std::span<const TargetInfo> all_targets();
const TargetInfo& target_info(Target t);
std::string_view target_name(Target t);
std::optional<Target> parse_target_id(std::string_view name);

/// Whether the target's statement covers the prime p.
bool applies(Target t, u64 p);
/// Modulus exponent m the target uses at p.
int modulus_exponent(Target t, u64 p);

struct CongruenceReport {
  u64 prime = 0;
  Target target = Target::THM11_4K;
  int modulus_exponent = 0;
  u128 lhs = 0;
  u128 rhs = 0;
  bool pass = false;
  double millis = 0.0;
  /// Multi-case targets: how many cases were checked and which one is shown.
  long cases = 1;
  std::string detail;
};

/// Per-prime state: one context, the Domb residues and lazily built tables.
/// Not shared between threads.
class PrimeWorkspace {
 public:
  PrimeWorkspace(u64 p, int precision);

  PrimeWorkspace(const PrimeWorkspace&) = delete;
  PrimeWorkspace& operator=(const PrimeWorkspace&) = delete;

  const PrimeContext& context() const noexcept { return *ctx_; }
  u64 prime() const noexcept { return ctx_->prime(); }
  int precision() const noexcept { return ctx_->precision(); }

  const DombTable& domb() const;
  const HarmonicCache& harmonics() const;
  const BernoulliTable& bernoulli() const;
  const EulerTable& euler() const;

 private:
  std::unique_ptr<PrimeContext> ctx_;
  mutable std::optional<DombTable> domb_;
  mutable std::optional<HarmonicCache> harmonics_;
  mutable std::optional<BernoulliTable> bernoulli_;
  mutable std::optional<EulerTable> euler_;
};

/// sum_{k<p} (c0 + c1 k + c2 k^2) D_k / base^k, straight from the DombTable.
PAdicValue weighted_domb_sum(const DombTable& table, long long base, long long c0, long long c1, long long c2);

/// Sun's R_3(p) = (1 + 2p + 4/3 (2^{p-1}-1) - 3/2 (3^{p-1}-1)) C((p-1)/2, floor(p/6))^2.
PAdicValue r3(const PrimeContext& ctx);

CongruenceReport thm11_4k(const PrimeWorkspace& ws);
CongruenceReport thm11_16k(const PrimeWorkspace& ws);
CongruenceReport conj2_mod_p2(const PrimeWorkspace& ws);
/// The (3k+2)/4^k and (3k+1)/16^k congruences; throws WrongPrimeClass unless p = 1 mod 3.
std::vector<CongruenceReport> thm12(const PrimeWorkspace& ws);
/// Every k and k^2 congruence that applies to p.
std::vector<CongruenceReport> thm13_all(const PrimeWorkspace& ws);
CongruenceReport conj1_dp1(const PrimeWorkspace& ws);
CongruenceReport musun(const PrimeWorkspace& ws);

CongruenceReport lemma22_check(const PrimeWorkspace& ws);
/// `t_samples` empty picks {0, +-1, +-2} plus four pseudo-random integers seeded by p.
CongruenceReport lemma_mpt_check(const PrimeWorkspace& ws, std::span<const long long> t_samples = {});
CongruenceReport lemma_p2j_check(const PrimeWorkspace& ws);
CongruenceReport lemma_sunh_check(const PrimeWorkspace& ws);
CongruenceReport lemma_sh55_check(const PrimeWorkspace& ws);

/// Single dispatch point. The workspace precision must cover the target.
CongruenceReport evaluate(Target t, const PrimeWorkspace& ws);

/// Working precision K = max exponent + guard for the target.
int required_precision(Target t, int guard);

/// Runs every applicable target at p, sorted by target id.
std::vector<CongruenceReport> run_prime(u64 p, std::span<const Target> targets, int guard = 1, bool timing = false);

}  // namespace dombcheck
