#pragma once

#include <map>
#include <string>
#include <utility>

#include "zetaform/integer_valued.hpp"
#include "zetaform/polynomial.hpp"

namespace zetaform {

/// Rational function in Delta-normal representation:
///   R(x) = sum_{alpha, m} A_{m,alpha} / (x+alpha)^m  +  P(x),
/// alpha >= 0, 1 <= m <= pole_cap, with the arithmetic contracts
///   D_Delta^{pole_cap - m} A_{m,alpha} in Z  and
///   D_Delta^{pole_cap} P(x) integer-valued.
/// The contracts are assertable (check_contract), not enforced on every
/// mutation: intermediate states during construction may violate them.
class DeltaNormal {
 public:
  using FractionMap = std::map<std::pair<long, int>, Rat>;  // (alpha, m) -> A

  DeltaNormal(long delta, int pole_cap);

  long delta() const { return delta_; }
  int pole_cap() const { return pole_cap_; }
  const FractionMap& fractions() const { return fractions_; }
  const IntegerValuedPolynomial& poly_part() const { return poly_; }

  void add_fraction(long alpha, int order, const Rat& coeff);
  void add_poly(const IntegerValuedPolynomial& p);
  /// Lowers pole_cap to the largest pole order actually present (>= 1).
  void tighten_pole_cap();

  bool is_zero() const { return fractions_.empty() && poly_.is_zero(); }
  /// Proper means the polynomial part vanishes (so index < 0).
  bool is_proper() const { return poly_.is_zero(); }
  int max_pole_order() const;

  /// Numerator degree minus denominator degree of the normalized quotient.
  /// The zero function gets index -1 (harmlessly proper).
  long index() const;

  Rat evaluate(const Rat& x) const;

  /// Same Delta and pole_cap, fraction part only / polynomial part only.
  DeltaNormal fraction_only() const;
  IntegerValuedPolynomial poly_only() const { return poly_; }

  /// Multiplies by 1/(x+beta), redistributing via partial fractions. The
  /// result's pole orders may exceed pole_cap; callers re-tighten via
  /// set_pole_cap/tighten after finishing a product chain.
  void multiply_by_simple_pole(long beta);
  void set_pole_cap(int cap);

  /// Lemma 2, constructively: R * T with deg T <= Delta. Pole cap preserved.
  DeltaNormal multiply_by_ivp(const IntegerValuedPolynomial& t) const;

  /// Verifies every arithmetic contract; returns a diagnostic on failure.
  bool check_contract(std::string* why = nullptr) const;

  bool operator==(const DeltaNormal& o) const {
    return delta_ == o.delta_ && pole_cap_ == o.pole_cap_ &&
           fractions_ == o.fractions_ && poly_.binomial_coeffs() == o.poly_.binomial_coeffs();
  }

 private:
  long delta_;
  int pole_cap_;
  FractionMap fractions_;
  IntegerValuedPolynomial poly_;
};

/// Coefficients t_k of T(x) = sum_k t_k (x+alpha)^k (Taylor shift).
std::vector<Rat> taylor_at(const Polynomial& t, const Rat& alpha);

}  // namespace zetaform
