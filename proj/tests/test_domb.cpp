#include "doctest.h"

#include "dombcheck/domb_numbers.hpp"
#include "dombcheck/power_series.hpp"

using namespace dombcheck;

TEST_SUITE("domb_numbers") {

TEST_CASE("exact values") {
  CHECK(domb_exact(0) == 1);
  CHECK(domb_exact(2) == 28);
  CHECK(domb_exact(4) == 2716);
  const auto seq = domb_exact_range(5);
  const std::vector<mpz_class> expected{1, 4, 28, 256, 2716, 31504};
  CHECK(seq == expected);
  CHECK(domb_via_cz(1) == 4);
  CHECK(domb_via_sun(2) == 28);
  CHECK(domb_via_sun(0) == 1);
}

TEST_CASE("transformation formulas agree to n = 200") {
  const auto seq = domb_exact_range(200);
  for (unsigned n = 0; n <= 200; ++n) {
    INFO("n = " << n);
    REQUIRE(seq[n] > 0);
    REQUIRE(domb_via_cz(n) == seq[n]);
    REQUIRE(domb_via_sun(n) == seq[n]);
  }
}

TEST_CASE("tables mod p^K") {
  PrimeContext c5(5, 3);
  DombTable t(c5);
  REQUIRE(t.size() == 5);
  const std::vector<u128> expected{1, 4, 28, 6, 91};
  for (std::size_t k = 0; k < 5; ++k) CHECK(t[k] == expected[k]);

  const auto seq = domb_exact_range(200);
  for (u64 p : {7ULL, 31ULL, 97ULL, 211ULL, 401ULL}) {
    PrimeContext ctx(p, 4);
    DombTable table(ctx);
    const mpz_class mod = to_mpz(ctx.modulus());
    for (std::size_t k = 0; k < std::min<std::size_t>(p, 201); ++k) {
      INFO("p = " << p << " k = " << k);
      mpz_class r = seq[k] % mod;
      REQUIRE(to_string(table[k]) == r.get_str());
    }
  }
}

TEST_CASE("generating function and integrality") {
  const auto rogers = rogers_series_check(24);
  CHECK(rogers.pass);
  CHECK_FALSE(rogers.first_mismatch.has_value());
  REQUIRE(rogers.coefficients.size() == 25);
  CHECK(rogers.coefficients[5] == 31504);
  const auto liu = liu_integrality_check(200);
  CHECK(liu.pass);
  CHECK(liu.plus_values.size() == 200);
  // n = 1: (1/1) * 1 * D_0 = 1
  CHECK(liu.plus_values.front() == 1);
}

TEST_CASE("power series inverse") {
  PowerSeries one_minus_x(5);
  one_minus_x[0] = 1;
  one_minus_x[1] = -1;
  const auto inv = one_minus_x.inverse();
  for (std::size_t i = 0; i <= 4; ++i) CHECK(inv[i] == 1);
}

}  // TEST_SUITE
