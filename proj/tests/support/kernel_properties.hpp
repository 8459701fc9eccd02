#pragma once

// Randomized law checks on the p-adic kernel, shared by the unit tests and
// the acceptance runner. Every case compares against an independent
// computation (big integers, exact rationals or a closed form).

#include <cstdint>
#include <string>
#include <vector>

namespace dombcheck::testing {

struct PropertyResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;
};

PropertyResult gamma_reflection(std::uint64_t seed, long cases);
PropertyResult gamma_shift(std::uint64_t seed, long cases);
PropertyResult gamma_continuity(std::uint64_t seed, long cases);
PropertyResult wilson(std::uint64_t seed, long cases);
PropertyResult embed_homomorphism(std::uint64_t seed, long cases);
PropertyResult ring_laws(std::uint64_t seed, long cases);
PropertyResult legendre_valuation(std::uint64_t seed, long cases);
PropertyResult binomial_vs_bigint(std::uint64_t seed, long cases);
PropertyResult half_binomial_vs_rational(std::uint64_t seed, long cases);

std::vector<PropertyResult> all_kernel_properties(std::uint64_t seed, long cases);

}  // namespace dombcheck::testing
