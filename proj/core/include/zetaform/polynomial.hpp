#pragma once

#include <vector>

#include "zetaform/rational.hpp"

namespace zetaform {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// Canonical form: no trailing zero coefficient; the zero polynomial is the
/// empty coefficient list (degree() == kZeroDegree).
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Polynomial(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
  }

  static Polynomial monomial(const Rat& coeff, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
  }

  Rat evaluate(const Rat& x) const;

  /// Maximum of the absolute values of the coefficients; 0 for the zero polynomial.
  Rat height() const;

  /// True iff D^e * this has all-integer coefficients.
  bool clears_denominator(const Int& d, long e) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& s) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }

  /// Multiplies by x^k.
  Polynomial shifted_up(int k) const;

  /// Exact division by (x + alpha); throws if the remainder is nonzero.
  Polynomial divide_by_linear(const Rat& alpha) const;

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace zetaform
