#include "doctest.h"

#include "dombcheck/padic.hpp"

using namespace dombcheck;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const ArithmeticError& e) {
    return e.kind();
  }
  FAIL("no ArithmeticError thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("padic") {

TEST_CASE("context validation") {
  CHECK(kind_of([] { PrimeContext(9, 3); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { PrimeContext(3, 3); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { PrimeContext(7, 0); }) == ErrorKind::InvalidArgument);
  // 1009^13 > 2^126
  CHECK(kind_of([] { PrimeContext(1009, 13); }) == ErrorKind::PrecisionBudget);
  PrimeContext ctx(7, 3);
  CHECK(ctx.modulus() == 343);
  CHECK(ctx.power(2) == 49);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(1999));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK(is_prime(1'000'000'007ULL));
  CHECK_FALSE(is_prime(3'215'031'751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("embed_rational") {
  PrimeContext c5(5, 3), c7(7, 3);
  CHECK(embed_rational(0, c7).is_exact_zero());
  const auto half = embed_rational(q(1, 2), c5);
  CHECK(half.valuation() == 0);
  CHECK(half.residue(3) == 63);
  const auto v = embed_rational(q(49, 16), c7);
  CHECK(v.valuation() == 2);
  CHECK(v.residue(3) == 196);
  CHECK(kind_of([&] { embed_rational(q(1, 5), c5).residue(3); }) == ErrorKind::NegativeValuation);
  CHECK(embed_rational(q(1, 5), c5).valuation() == -1);
}

TEST_CASE("arithmetic and precision") {
  PrimeContext c5(5, 3), c7(7, 3);
  const auto five = PAdicValue::from_int(5, c5);
  const auto sq = five * five;
  CHECK(sq.valuation() == 2);
  CHECK(sq.unit() == 1);
  const auto x = embed_rational(q(17, 3), c5);
  CHECK((x + (-x)).is_zero());
  CHECK((x - x).residue(3) == 0);
  const auto ratio = PAdicValue::from_int(49, c7) / PAdicValue::from_int(16, c7);
  CHECK(ratio.residue(3) == embed_rational(q(49, 16), c7).residue(3));
  CHECK(ratio.valuation() == 2);

  // 1 + 124 = 125: the sum's absolute precision stays at 3, so the digits vanish.
  const auto s = PAdicValue::from_residue(1, 3, c5) + PAdicValue::from_residue(124, 3, c5);
  CHECK(s.is_zero());
  CHECK(s.absolute_precision() == 3);
  CHECK(s.residue(3) == 0);

  // Only two digits known: extraction at 3 must refuse.
  const auto coarse = PAdicValue::from_residue(7, 2, c5);
  CHECK(coarse.residue(2) == 7);
  CHECK(kind_of([&] { coarse.residue(3); }) == ErrorKind::InsufficientPrecision);
  CHECK(kind_of([&] { five.residue(4); }) == ErrorKind::InvalidArgument);

  CHECK(PAdicValue::zero(c5).residue(3) == 0);
  CHECK(kind_of([&] { PAdicValue::one(c5) / PAdicValue::zero(c5); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { five + PAdicValue::one(c7); }) == ErrorKind::InvalidArgument);
  // p^-1 * p^2: valuation 1
  CHECK((five.inverse() * sq).residue(3) == 5);
  CHECK(embed_rational(q(2, 3), c5).pow(-2).residue(3) == embed_rational(q(9, 4), c5).residue(3));
}

TEST_CASE("wide moduli use the slow path and agree") {
  // 1000003^4 > 2^64 forces the 256-bit multiply.
  PrimeContext wide(1'000'003, 4, 1);
  const auto a = embed_rational(q(123456789, 987654321), wide);
  const auto b = a.inverse();
  CHECK((a * b).residue(4) == 1);
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), 1'000'003, 4);
  mpz_class inv;
  mpz_class den = 987654321;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class expected = (inv * 123456789) % mod;
  CHECK(to_string(a.residue(4)) == expected.get_str());
}

TEST_CASE("factorial_decomposed") {
  PrimeContext c5(5, 2), c7(7, 3);
  auto f4 = factorial_decomposed(4, c5);
  CHECK(f4.valuation == 0);
  CHECK(f4.unit == 24);
  auto f6 = factorial_decomposed(6, c5);
  CHECK(f6.valuation == 1);
  CHECK(f6.unit == 19);
  auto f0 = factorial_decomposed(0, c7);
  CHECK(f0.valuation == 0);
  CHECK(f0.unit == 1);
}

TEST_CASE("binomials and pochhammer") {
  PrimeContext c7(7, 3), c5(5, 3);
  auto b = binomial_int(4, 2, c7);
  CHECK(b.valuation() == 0);
  CHECK(b.residue(3) == 6);
  auto c = binomial_int(6, 3, c5);
  CHECK(c.valuation() == 1);
  CHECK(c.unit() % 5 == 4);
  CHECK(c.residue(3) == 20);
  CHECK(binomial_int(3, 5, c7).is_exact_zero());
  CHECK(kind_of([&] { binomial_int(-1, 0, c7); }) == ErrorKind::InvalidArgument);

  CHECK(binomial_rational(q(-1, 2), 1, c7).residue(3) == 171);
  CHECK(binomial_rational(q(5, 3), 0, c7).residue(3) == 1);
  for (u64 p : {7ULL, 13ULL, 19ULL, 31ULL}) {
    PrimeContext ctx(p, 3);
    CHECK(binomial_rational(q(-1, 2), (2 * p - 2) / 3, ctx).valuation() == 1);
  }

  CHECK(pochhammer(1, 6, c7).residue(3) == 720 % 343);
  CHECK(pochhammer(q(1, 3), 2, c5).residue(3) == 56);
  CHECK(pochhammer(q(2, 9), 0, c5).residue(3) == 1);
}

TEST_CASE("jacobi3") {
  CHECK(jacobi3(7) == 1);
  CHECK(jacobi3(5) == -1);
  CHECK(jacobi3(13) == 1);
  CHECK(jacobi3(11) == -1);
}

}  // TEST_SUITE
