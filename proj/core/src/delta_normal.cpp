#include "zetaform/delta_normal.hpp"

#include <stdexcept>

#include "zetaform/elementary.hpp"

namespace zetaform {

DeltaNormal::DeltaNormal(long delta, int pole_cap)
    : delta_(delta), pole_cap_(pole_cap) {
  if (delta < 0) throw std::invalid_argument("DeltaNormal: negative Delta");
  if (pole_cap < 1) throw std::invalid_argument("DeltaNormal: pole_cap must be >= 1");
}

void DeltaNormal::add_fraction(long alpha, int order, const Rat& coeff) {
  if (alpha < 0) throw std::invalid_argument("DeltaNormal: negative pole shift");
  if (order < 1) throw std::invalid_argument("DeltaNormal: pole order must be >= 1");
  if (coeff == 0) return;
  auto key = std::make_pair(alpha, order);
  auto [it, inserted] = fractions_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) fractions_.erase(it);
  }
}

void DeltaNormal::add_poly(const IntegerValuedPolynomial& p) { poly_ = poly_ + p; }

int DeltaNormal::max_pole_order() const {
  int m = 0;
  for (const auto& [key, a] : fractions_) m = std::max(m, key.second);
  return m;
}

void DeltaNormal::tighten_pole_cap() {
  pole_cap_ = std::max(max_pole_order(), 1);
}

void DeltaNormal::set_pole_cap(int cap) {
  if (cap < max_pole_order())
    throw std::invalid_argument("DeltaNormal: pole_cap below an existing pole order");
  pole_cap_ = std::max(cap, 1);
}

long DeltaNormal::index() const {
  if (is_zero()) return -1;
  if (!poly_.is_zero()) return poly_.degree();
  // Normalize the fraction part: common denominator degree minus numerator
  // degree. Per pole alpha the denominator power is the largest order present.
  std::map<long, int> order_of;
  for (const auto& [key, a] : fractions_)
    order_of[key.first] = std::max(order_of[key.first], key.second);
  long den_deg = 0;
  for (const auto& [alpha, m] : order_of) den_deg += m;
  Polynomial numerator;
  for (const auto& [key, a] : fractions_) {
    // a / (x+alpha)^m contributes a * prod_{beta != alpha} (x+beta)^{M_beta}
    //                                 * (x+alpha)^{M_alpha - m}.
    Polynomial part(a);
    for (const auto& [beta, mb] : order_of) {
      int e = (beta == key.first) ? mb - key.second : mb;
      for (int i = 0; i < e; ++i)
        part = part * Polynomial(std::vector<Rat>{Rat(beta), Rat(1)});
    }
    numerator += part;
  }
  if (numerator.is_zero()) return -1;
  return numerator.degree() - den_deg;
}

Rat DeltaNormal::evaluate(const Rat& x) const {
  Rat v(0);
  for (const auto& [key, a] : fractions_) v += a / pow_rat(x + Rat(key.first), key.second);
  if (!poly_.is_zero()) {
    if (!is_integer(x))
      throw std::invalid_argument("DeltaNormal::evaluate: poly part needs integer x");
    v += poly_.evaluate(x.get_num());
  }
  return v;
}

DeltaNormal DeltaNormal::fraction_only() const {
  DeltaNormal r(delta_, pole_cap_);
  r.fractions_ = fractions_;
  return r;
}

void DeltaNormal::multiply_by_simple_pole(long beta) {
  if (beta < 0) throw std::invalid_argument("DeltaNormal: negative pole shift");
  FractionMap old;
  old.swap(fractions_);
  for (const auto& [key, a] : old) {
    const auto [alpha, m] = key;
    if (alpha == beta) {
      add_fraction(alpha, m + 1, a);
    } else {
      auto [at_alpha, at_beta] = partial_fraction_pair(m, 1, static_cast<int>(alpha),
                                                      static_cast<int>(beta));
      for (int k = 1; k <= m; ++k) add_fraction(alpha, k, a * at_alpha[k - 1]);
      add_fraction(beta, 1, a * at_beta[0]);
    }
  }
  if (!poly_.is_zero()) {
    // T(x)/(x+beta) = T(-beta)/(x+beta) + Q(x).
    std::vector<Rat> t = taylor_at(poly_.to_power_basis(), Rat(beta));
    add_fraction(beta, 1, t[0]);
    std::vector<Rat> q(t.begin() + 1, t.end());
    // Shift the quotient back to the power basis in x: sum t_{k+1} (x+beta)^k.
    Polynomial quotient;
    Polynomial lin(std::vector<Rat>{Rat(beta), Rat(1)});
    Polynomial power(Rat(1));
    for (size_t k = 0; k < q.size(); ++k) {
      quotient += power * q[k];
      power = power * lin;
    }
    poly_ = IntegerValuedPolynomial::from_power_basis(quotient);
  }
}

DeltaNormal DeltaNormal::multiply_by_ivp(const IntegerValuedPolynomial& t) const {
  if (t.degree() > delta_)
    throw std::invalid_argument("multiply_by_ivp: deg T exceeds Delta");
  DeltaNormal r(delta_, pole_cap_);
  const Polynomial tp = t.to_power_basis();
  for (const auto& [key, a] : fractions_) {
    const auto [alpha, m] = key;
    // A T(x)/(x+alpha)^m = sum_k A t_k (x+alpha)^{k-m} via the Taylor shift;
    // this iterates the Lemma 2 division step to completion.
    std::vector<Rat> coeffs = taylor_at(tp, Rat(alpha));
    Polynomial lin(std::vector<Rat>{Rat(alpha), Rat(1)});
    Polynomial power(Rat(1));
    Polynomial poly_accum;
    for (long k = 0; k < static_cast<long>(coeffs.size()); ++k) {
      if (coeffs[k] != 0) {
        if (k < m) {
          r.add_fraction(alpha, static_cast<int>(m - k), a * coeffs[k]);
        } else {
          poly_accum += power * (a * coeffs[k]);
        }
      }
      if (k >= m) power = power * lin;
      else if (k == m - 1) power = Polynomial(Rat(1));
    }
    if (!poly_accum.is_zero())
      r.add_poly(IntegerValuedPolynomial::from_power_basis(poly_accum));
  }
  if (!poly_.is_zero()) {
    Polynomial prod = poly_.to_power_basis() * tp;
    r.add_poly(IntegerValuedPolynomial::from_power_basis(prod));
  }
  return r;
}

bool DeltaNormal::check_contract(std::string* why) const {
  const Int d = lcm_upto(delta_);
  for (const auto& [key, a] : fractions_) {
    const auto [alpha, m] = key;
    if (m > pole_cap_) {
      if (why) *why = "pole order exceeds pole_cap";
      return false;
    }
    if (!is_integer(a * Rat(pow_int(d, pole_cap_ - m)))) {
      if (why)
        *why = "D^{M-m} A not integral at alpha=" + std::to_string(alpha) +
               " m=" + std::to_string(m);
      return false;
    }
  }
  if (!poly_.is_zero()) {
    IntegerValuedPolynomial scaled = poly_ * Rat(pow_int(d, pole_cap_));
    if (!scaled.is_integer_valued()) {
      if (why) *why = "D^M * poly part not integer-valued";
      return false;
    }
  }
  return true;
}

std::vector<Rat> taylor_at(const Polynomial& t, const Rat& alpha) {
  // Repeated synthetic division of T by (x+alpha); remainders are the shifted
  // coefficients t_k with T(x) = sum t_k (x+alpha)^k.
  std::vector<Rat> work = t.coeffs();
  std::vector<Rat> out;
  if (work.empty()) return {Rat(0)};
  for (size_t round = 0; round < t.coeffs().size(); ++round) {
    Rat carry(0);
    for (size_t i = work.size(); i-- > 0;) {
      Rat next = work[i] + carry;
      carry = -alpha * next;
      work[i] = next;
    }
    // work[0] now holds the remainder; the quotient occupies work[1..].
    out.push_back(work[0]);
    work.erase(work.begin());
    if (work.empty()) break;
  }
  return out;
}

}  // namespace zetaform
