#pragma once

// Exact-rational checks of the finite binomial-sum identities behind the
// Domb congruences. A pass is a proof for the tested parameter range.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dombcheck/padic.hpp"

namespace dombcheck {

enum class Identity {
  I1, I2, I3, I4, I5, I6, I7, I8, I9, I10, I11, I12, I13, I14,
  CYID,
  CZ_TRANSFORM,
  SUN_TRANSFORM,
};

std::span<const Identity> all_identities();
std::string_view identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);

struct IdentityFailure {
  long n = 0;
  long j = 0;  // second parameter where the identity has one (k for CYID)
  Rational lhs;
  Rational rhs;
};

struct IdentityReport {
  Identity id = Identity::I1;
  long max_n = 0;
  long cases = 0;
  bool pass = true;
  std::optional<IdentityFailure> failure;
};

/// Checks the identity for 0 <= n <= max_n and every admissible second parameter.
IdentityReport check(Identity id, long max_n);

/// Whole catalog; runs on `workers` threads, results in catalog order.
std::vector<IdentityReport> check_all(long max_n, int workers = 1);

/// Generalized binomial prod_{i<m}(a-i)/m! over the rationals.
Rational rational_binomial(const Rational& a, long m);

/// Rising factorial (a)_k over the rationals.
Rational rational_pochhammer(const Rational& a, long k);

}  // namespace dombcheck
