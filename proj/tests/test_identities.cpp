#include "doctest.h"

#include "dombcheck/identities.hpp"

using namespace dombcheck;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("catalog") {
  CHECK(all_identities().size() == 17);
  CHECK(parse_identity("I11") == Identity::I11);
  CHECK(parse_identity("CZ_TRANSFORM") == Identity::CZ_TRANSFORM);
  CHECK_FALSE(parse_identity("I15").has_value());
  CHECK(identity_name(Identity::CYID) == "CYID");
}

TEST_CASE("rational helpers") {
  CHECK(rational_binomial(q(-1, 2), 1) == q(-1, 2));
  CHECK(rational_binomial(q(-1, 3), 2) == q(2, 9));  // (-1/3)(-4/3)/2
  CHECK(rational_binomial(7, 3) == 35);
  CHECK(rational_binomial(q(5, 7), 0) == 1);
  CHECK(rational_pochhammer(1, 5) == 120);
  CHECK(rational_pochhammer(q(1, 3), 2) == q(4, 9));
}

TEST_CASE("every identity holds exactly to n = 40") {
  const auto reports = check_all(40, 4);
  REQUIRE(reports.size() == 17);
  for (const auto& r : reports) {
    INFO(identity_name(r.id));
    if (r.failure) INFO("n = " << r.failure->n << " j = " << r.failure->j);
    CHECK(r.pass);
    CHECK(r.cases > 40);
  }
}

TEST_CASE("parallel and serial runs agree") {
  const auto a = check_all(12, 1);
  const auto b = check_all(12, 8);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].cases == b[i].cases);
    CHECK(a[i].pass == b[i].pass);
  }
}

TEST_CASE("case counts follow the parameter domains") {
  // n = 0..3 with j = 0..n
  CHECK(check(Identity::I1, 3).cases == 10);
  // n = 0..3, plus the product/Pochhammer cross-check per n
  CHECK(check(Identity::I5, 3).cases == 8);
  CHECK(check(Identity::I3, 3).cases == 4);
  CHECK(check(Identity::CYID, 2).cases == 9);
  CHECK_THROWS_AS(check(Identity::I1, -1), ArithmeticError);
}

}  // TEST_SUITE
