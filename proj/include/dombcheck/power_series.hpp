#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "dombcheck/padic.hpp"

namespace dombcheck {

/// Dense formal power series over exact rationals, truncated mod u^order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order) {}
  PowerSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order);
  }

  static PowerSeries constant(std::size_t order, const Rational& c) {
    PowerSeries s(order);
    if (order > 0) s.coeffs_[0] = c;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  PowerSeries& operator+=(const PowerSeries& other) {
    for (std::size_t i = 0; i < coeffs_.size() && i < other.order(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }

  PowerSeries& operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.order(), b.order()));
    const std::size_t n = out.order();
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  /// Multiplicative inverse; the constant term must be nonzero.
  PowerSeries inverse() const {
    if (coeffs_.empty() || sgn(coeffs_[0]) == 0) {
      throw ArithmeticError(ErrorKind::DivisionByZero, "power series with zero constant term");
    }
    PowerSeries inv(order());
    inv.coeffs_[0] = 1 / coeffs_[0];
    for (std::size_t n = 1; n < order(); ++n) {
      Rational acc = 0;
      for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * inv.coeffs_[n - k];
      inv.coeffs_[n] = -acc * inv.coeffs_[0];
    }
    return inv;
  }

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace dombcheck
