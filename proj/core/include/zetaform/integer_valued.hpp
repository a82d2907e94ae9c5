#pragma once

#include <utility>
#include <vector>

#include "zetaform/polynomial.hpp"

namespace zetaform {

/// Polynomial in the binomial basis: sum of b_k * C(x, k).
/// The polynomial is integer-valued at all integers iff every b_k is an integer.
class IntegerValuedPolynomial {
 public:
  IntegerValuedPolynomial() = default;
  explicit IntegerValuedPolynomial(std::vector<Rat> binomial_coeffs)
      : b_(std::move(binomial_coeffs)) {
    trim();
  }

  static IntegerValuedPolynomial constant(const Rat& c) {
    return IntegerValuedPolynomial(std::vector<Rat>{c});
  }

  /// Basis change from the power basis via finite differences at 0, 1, ..., deg.
  static IntegerValuedPolynomial from_power_basis(const Polynomial& p);

  Polynomial to_power_basis() const;

  int degree() const { return static_cast<int>(b_.size()) - 1; }
  bool is_zero() const { return b_.empty(); }
  const std::vector<Rat>& binomial_coeffs() const { return b_; }

  bool is_integer_valued() const {
    for (const Rat& b : b_)
      if (!is_integer(b)) return false;
    return true;
  }

  Rat evaluate(const Int& x) const;

  IntegerValuedPolynomial operator*(const Rat& s) const;
  IntegerValuedPolynomial operator+(const IntegerValuedPolynomial& o) const;

  /// Q1 with Q1(n) = sum_{k=1}^{n} P(k) as a polynomial identity.
  IntegerValuedPolynomial discrete_sum() const;
  /// Q2 with Q2(n) = sum_{k=1}^{n-1} P(k); Q2(1) = 0.
  IntegerValuedPolynomial discrete_sum_strict() const;

  /// Splits T(x)/(x+alpha) = T(-alpha)/(x+alpha) + Q(x) with deg Q <= delta-1.
  /// Requires deg T <= delta. D_delta * Q is integer-valued when T is.
  std::pair<Rat, Polynomial> divide_linear(long alpha, long delta) const;

 private:
  void trim() {
    while (!b_.empty() && b_.back() == 0) b_.pop_back();
  }
  std::vector<Rat> b_;
};

}  // namespace zetaform
