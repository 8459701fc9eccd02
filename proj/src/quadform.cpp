#include "dombcheck/quadform.hpp"

#include <cmath>

namespace dombcheck {

namespace {

u64 powmod(u64 b, u64 e, u64 p) { return static_cast<u64>(modarith::pow(b, e, p)); }
u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(modarith::mul(a, b, p)); }

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::optional<u64> sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;

  u64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;

  u64 m = static_cast<u64>(s);
  u64 c = powmod(z, q, p);
  u64 t = powmod(a, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (u64 k = 0; k + i + 1 < m; ++k) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

QuadDecomposition decompose_x2_3y2(u64 p) {
  if (p <= 3 || !is_prime(p)) {
    throw ArithmeticError(ErrorKind::InvalidArgument, std::to_string(p) + " is not a prime above 3");
  }
  if (p % 3 != 1) {
    throw ArithmeticError(ErrorKind::NotRepresentable, std::to_string(p) + " = 2 mod 3 has no x^2 + 3y^2 form");
  }
  auto root = sqrt_mod(p - 3, p);
  if (!root) throw ArithmeticError(ErrorKind::NotRepresentable, "-3 is not a square mod " + std::to_string(p));

  // Cornacchia: descend the Euclidean remainders of (p, r) until below sqrt(p).
  u64 a = p;
  u64 b = std::max(*root, p - *root);
  const u64 bound = isqrt(p);
  while (b > bound) {
    u64 r = a % b;
    a = b;
    b = r;
  }
  const u64 rest = p - b * b;
  if (rest % 3 != 0) throw ArithmeticError(ErrorKind::NotRepresentable, "Cornacchia descent failed");
  const u64 y2 = rest / 3;
  const u64 y = isqrt(y2);
  if (y * y != y2 || y == 0) throw ArithmeticError(ErrorKind::NotRepresentable, "Cornacchia descent failed");
  return {b, y};
}

}  // namespace dombcheck
