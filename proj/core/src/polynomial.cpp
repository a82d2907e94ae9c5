#include "zetaform/polynomial.hpp"

#include <algorithm>

namespace zetaform {

Polynomial Polynomial::monomial(const Rat& coeff, int degree) {
  if (coeff == 0) return Polynomial();
  std::vector<Rat> c(degree + 1, Rat(0));
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

Rat Polynomial::evaluate(const Rat& x) const {
  Rat v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Rat Polynomial::height() const {
  Rat h(0);
  for (const Rat& c : c_) h = std::max(h, Rat(abs(c)));
  return h;
}

bool Polynomial::clears_denominator(const Int& d, long e) const {
  Rat scale(pow_int(d, e));
  for (const Rat& c : c_)
    if (!is_integer(Rat(c * scale))) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  std::vector<Rat> c(c_);
  for (Rat& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rat& s) const {
  if (s == 0) return Polynomial();
  std::vector<Rat> c(c_);
  for (Rat& x : c) x *= s;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted_up(int k) const {
  if (is_zero()) return Polynomial();
  std::vector<Rat> c(c_.size() + k, Rat(0));
  std::copy(c_.begin(), c_.end(), c.begin() + k);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::divide_by_linear(const Rat& alpha) const {
  // Synthetic division by (x + alpha), root at -alpha.
  if (is_zero()) return Polynomial();
  std::vector<Rat> q(c_.size() - 1, Rat(0));
  Rat carry(0);
  for (int i = degree(); i >= 1; --i) {
    carry = c_[i] + carry;
    q[i - 1] = carry;
    carry *= -alpha;
  }
  if (c_[0] + carry != 0)
    throw std::domain_error("divide_by_linear: nonzero remainder");
  return Polynomial(std::move(q));
}

}  // namespace zetaform
