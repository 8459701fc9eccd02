#pragma once

// Square roots mod p and the representation p = x^2 + 3y^2.

#include <optional>

#include "dombcheck/padic.hpp"

namespace dombcheck {

/// Tonelli-Shanks. Returns the smaller of the two roots, or nullopt for a non-residue.
std::optional<u64> sqrt_mod(u64 a, u64 p);

struct QuadDecomposition {
  u64 x = 0;
  u64 y = 0;
};

/// Cornacchia's algorithm for x^2 + 3y^2 = p; p must be a prime = 1 mod 3.
QuadDecomposition decompose_x2_3y2(u64 p);

}  // namespace dombcheck
