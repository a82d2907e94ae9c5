#include "zetaform/integer_valued.hpp"

namespace zetaform {

IntegerValuedPolynomial IntegerValuedPolynomial::from_power_basis(const Polynomial& p) {
  if (p.is_zero()) return IntegerValuedPolynomial();
  int d = p.degree();
  std::vector<Rat> diffs(d + 1);
  for (int i = 0; i <= d; ++i) diffs[i] = p.evaluate(Rat(i));
  std::vector<Rat> b(d + 1);
  b[0] = diffs[0];
  for (int k = 1; k <= d; ++k) {
    for (int i = 0; i <= d - k; ++i) diffs[i] = diffs[i + 1] - diffs[i];
    b[k] = diffs[0];
  }
  return IntegerValuedPolynomial(std::move(b));
}

Polynomial IntegerValuedPolynomial::to_power_basis() const {
  Polynomial result;
  Polynomial basis(Rat(1));  // C(x, 0)
  for (size_t k = 0; k < b_.size(); ++k) {
    if (k > 0) {
      // C(x, k) = C(x, k-1) * (x - (k-1)) / k
      Polynomial factor(std::vector<Rat>{Rat(-static_cast<long>(k - 1)), Rat(1)});
      basis = basis * factor * Rat(1, static_cast<unsigned long>(k));
    }
    if (b_[k] != 0) result += basis * b_[k];
  }
  return result;
}

Rat IntegerValuedPolynomial::evaluate(const Int& x) const {
  Rat v(0);
  for (size_t k = 0; k < b_.size(); ++k)
    if (b_[k] != 0) v += b_[k] * Rat(binomial(x, static_cast<long>(k)));
  return v;
}

IntegerValuedPolynomial IntegerValuedPolynomial::operator*(const Rat& s) const {
  if (s == 0) return IntegerValuedPolynomial();
  std::vector<Rat> b(b_);
  for (Rat& x : b) x *= s;
  return IntegerValuedPolynomial(std::move(b));
}

IntegerValuedPolynomial IntegerValuedPolynomial::operator+(
    const IntegerValuedPolynomial& o) const {
  std::vector<Rat> b(std::max(b_.size(), o.b_.size()), Rat(0));
  for (size_t i = 0; i < b_.size(); ++i) b[i] += b_[i];
  for (size_t i = 0; i < o.b_.size(); ++i) b[i] += o.b_[i];
  return IntegerValuedPolynomial(std::move(b));
}

IntegerValuedPolynomial IntegerValuedPolynomial::discrete_sum() const {
  // sum_{x=1}^{n} C(x, k) = C(n+1, k+1) - C(1, k+1) = C(n, k) + C(n, k+1) - [k == 0]
  std::vector<Rat> q(b_.size() + 1, Rat(0));
  for (size_t k = 0; k < b_.size(); ++k) {
    q[k] += b_[k];
    q[k + 1] += b_[k];
  }
  if (!b_.empty()) q[0] -= b_[0];
  return IntegerValuedPolynomial(std::move(q));
}

IntegerValuedPolynomial IntegerValuedPolynomial::discrete_sum_strict() const {
  return discrete_sum() + (*this * Rat(-1));
}

std::pair<Rat, Polynomial> IntegerValuedPolynomial::divide_linear(long alpha,
                                                                  long delta) const {
  if (degree() > delta)
    throw std::invalid_argument("divide_linear: degree exceeds delta");
  Rat value = evaluate(Int(-alpha));
  Polynomial numerator = to_power_basis() - Polynomial(value);
  return {value, numerator.divide_by_linear(Rat(alpha))};
}

}  // namespace zetaform
