#include "doctest.h"

#include <map>

#include "dombcheck/congruences.hpp"
#include "dombcheck/sweep.hpp"

using namespace dombcheck;

namespace {

using T = Target;

std::map<Target, CongruenceReport> by_target(u64 p) {
  std::vector<Target> all;
  for (const auto& info : all_targets()) all.push_back(info.id);
  std::map<Target, CongruenceReport> out;
  for (auto& r : run_prime(p, all)) out.emplace(r.target, r);
  return out;
}

// Exact sum_{k<p} w(k) D_k / base^k reduced mod p^m, via big rationals.
std::string exact_weighted(u64 p, long base, long c0, long c1, long c2, int m) {
  Rational sum = 0;
  mpz_class d, pow = 1;
  for (unsigned k = 0; k < p; ++k) {
    const long w = c0 + c1 * static_cast<long>(k) + c2 * static_cast<long>(k * k);
    sum += Rational(domb_exact(k) * w, pow);
    pow *= base;
  }
  sum.canonicalize();
  mpz_class mod, inv;
  mpz_ui_pow_ui(mod.get_mpz_t(), p, static_cast<unsigned long>(m));
  mpz_class den = sum.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = sum.get_num() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r.get_str();
}

}  // namespace

TEST_SUITE("congruences") {

TEST_CASE("target catalog") {
  CHECK(all_targets().size() == 16);
  CHECK(parse_target_id("MUSUN_P5") == T::MUSUN_P5);
  CHECK_FALSE(parse_target_id("musun").has_value());
  CHECK(target_name(T::THM13_K_16K) == "THM13_K_16K");
  CHECK(applies(T::THM12_4K, 7));
  CHECK_FALSE(applies(T::THM12_4K, 11));
  CHECK_FALSE(applies(T::THM13_K_4K, 13));
  CHECK_FALSE(applies(T::LEMMA_SUNH, 5));
  CHECK(modulus_exponent(T::THM13_K2_4K, 7) == 3);
  CHECK(modulus_exponent(T::THM13_K2_4K, 11) == 2);
  CHECK(modulus_exponent(T::MUSUN_P5, 11) == 5);
  CHECK(required_precision(T::CONJ1_DP1, 1) == 5);
  CHECK(required_precision(T::THM11_4K, 2) == 5);
}

TEST_CASE("frozen residues for small primes") {
  struct Row {
    u64 p;
    Target t;
    u64 residue;
  };
  // Produced by the big-rational oracle in tests/oracles.
  const std::vector<Row> rows{
      {5, T::THM11_4K, 75},       {5, T::THM11_16K, 25},       {5, T::THM13_K2_4K, 20},
      {5, T::THM13_K2_16K, 16},   {5, T::THM13_K_4K, 23},      {5, T::THM13_K_16K, 2},
      {5, T::CONJ1_DP1, 216},     {5, T::MUSUN_P5, 1875},      {7, T::THM11_4K, 149},
      {7, T::THM11_16K, 149},     {7, T::THM12_4K, 49},        {7, T::THM12_16K, 196},
      {7, T::THM13_K2_4K, 39},    {7, T::THM13_K2_16K, 71},    {7, T::CONJ1_DP1, 575},
      {7, T::MUSUN_P5, 14406},    {7, T::CONJ2_MODP2, 2},      {11, T::THM11_4K, 242},
      {11, T::THM11_16K, 1210},   {11, T::THM13_K_4K, 92},     {11, T::THM13_K_16K, 29},
      {11, T::THM13_K2_4K, 8},    {11, T::THM13_K2_16K, 71},   {11, T::CONJ1_DP1, 2267},
      {11, T::MUSUN_P5, 29282},   {13, T::THM11_4K, 485},      {13, T::THM11_16K, 485},
      {13, T::THM12_4K, 1183},    {13, T::THM12_16K, 1690},    {13, T::THM13_K2_4K, 1023},
      {13, T::THM13_K2_16K, 1819}, {13, T::CONJ1_DP1, 3446},   {13, T::MUSUN_P5, 28561},
      {17, T::THM11_4K, 3757},    {17, T::THM11_16K, 578},     {17, T::THM13_K_4K, 150},
      {17, T::THM13_K_16K, 139},  {17, T::THM13_K2_4K, 39},    {17, T::THM13_K2_16K, 50},
      {17, T::CONJ1_DP1, 15488},  {17, T::MUSUN_P5, 1336336},  {19, T::THM11_4K, 2914},
      {19, T::THM11_16K, 2914},   {19, T::THM12_4K, 1083},     {19, T::THM12_16K, 3971},
      {19, T::THM13_K2_4K, 4504}, {19, T::THM13_K2_16K, 2931}, {19, T::CONJ1_DP1, 23447},
      {19, T::MUSUN_P5, 912247},
  };
  std::map<u64, std::map<Target, CongruenceReport>> cache;
  for (const auto& row : rows) {
    if (!cache.count(row.p)) cache[row.p] = by_target(row.p);
    INFO("p = " << row.p << " " << target_name(row.t));
    const auto& r = cache[row.p].at(row.t);
    CHECK(r.pass);
    CHECK(to_string(r.lhs) == std::to_string(row.residue));
    CHECK(to_string(r.rhs) == std::to_string(row.residue));
  }
}

TEST_CASE("R3 residues") {
  PrimeContext c5(5, 3), c11(11, 3), c17(17, 3);
  CHECK(r3(c5).residue(2) == 11);
  CHECK(r3(c11).residue(2) == 69);
  CHECK(r3(c17).residue(2) == 257);
}

TEST_CASE("weighted sums agree with exact rational sums") {
  struct W {
    long base, c0, c1, c2;
  };
  const std::vector<W> weights{{4, 1, 0, 0}, {16, 1, 0, 0}, {4, 2, 3, 0}, {16, 1, 3, 0},
                               {4, 0, 1, 0}, {16, 0, 0, 1}, {16, 0, 1, 3}};
  for (u64 p : sieve_primes(5, 43)) {
    PrimeContext ctx(p, 3);
    DombTable table(ctx);
    for (const auto& w : weights) {
      INFO("p = " << p << " base " << w.base << " w = " << w.c0 << "," << w.c1 << "," << w.c2);
      const auto got = weighted_domb_sum(table, w.base, w.c0, w.c1, w.c2);
      CHECK(to_string(got.residue(3)) == exact_weighted(p, w.base, w.c0, w.c1, w.c2, 3));
    }
  }
}

TEST_CASE("cross-target invariants to p = 400") {
  for (u64 p : sieve_primes(5, 400)) {
    INFO("p = " << p);
    auto r = by_target(p);
    for (const auto& [t, rep] : r) {
      INFO(target_name(t) << " " << rep.detail);
      CHECK(rep.pass);
    }
    const u128 p2 = static_cast<u128>(p) * p;
    const u128 p3 = p2 * p;
    CHECK(r.at(T::THM11_4K).lhs % p2 == r.at(T::CONJ2_MODP2).rhs);
    CHECK(r.at(T::THM11_16K).lhs % p2 == r.at(T::CONJ2_MODP2).rhs);
    if (p % 3 == 1) {
      CHECK(r.at(T::THM11_4K).lhs == r.at(T::THM11_16K).lhs);
      CHECK(r.at(T::THM12_4K).lhs == 2 * r.at(T::THM12_16K).lhs % p3);
      CHECK_FALSE(r.count(T::THM13_K_4K));
    } else {
      CHECK((r.at(T::THM13_K_4K).lhs + r.at(T::THM13_K_16K).lhs) % p2 == 0);
      CHECK_FALSE(r.count(T::THM12_4K));
      CHECK_FALSE(r.count(T::LEMMA22));
    }
  }
}

TEST_CASE("prime-class and precision guards") {
  PrimeWorkspace ws11(11, 4);
  CHECK_THROWS_AS(thm12(ws11), ArithmeticError);
  CHECK_THROWS_AS(lemma22_check(ws11), ArithmeticError);
  PrimeWorkspace ws13(13, 3);
  CHECK_THROWS_AS(evaluate(T::THM11_4K, ws13), ArithmeticError);  // needs a guard digit
  CHECK_THROWS_AS(evaluate(T::MUSUN_P5, ws13), ArithmeticError);
}

TEST_CASE("lemma checks with explicit samples") {
  PrimeWorkspace ws(31, 4);
  const std::vector<long long> ts{-1'000'000, -7, 0, 3, 999'983};
  const auto mpt = lemma_mpt_check(ws, ts);
  CHECK(mpt.pass);
  CHECK(mpt.cases == 5);
  CHECK(lemma22_check(ws).pass);
  CHECK(lemma22_check(ws).cases == 16);
  CHECK(lemma_p2j_check(ws).pass);
  CHECK(lemma_sunh_check(ws).pass);
  CHECK(lemma_sh55_check(ws).pass);
  // p = 5, j = 1: 4 C(3,1) C(7,4) = 420 = 45 (mod 125)
  PrimeWorkspace ws5(5, 4);
  CHECK(lemma_p2j_check(ws5).pass);
}

TEST_CASE("guard digits do not change verdicts or residues") {
  std::vector<Target> all;
  for (const auto& info : all_targets()) all.push_back(info.id);
  for (u64 p : {5ULL, 7ULL, 23ULL, 37ULL, 101ULL}) {
    const auto a = run_prime(p, all, 1);
    const auto b = run_prime(p, all, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      INFO("p = " << p << " " << target_name(a[i].target));
      CHECK(a[i].pass == b[i].pass);
      CHECK(a[i].lhs == b[i].lhs);
      CHECK(a[i].rhs == b[i].rhs);
    }
  }
}

}  // TEST_SUITE
