#include "zetaform/corpus.hpp"

namespace zetaform {

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace

ElementarySum random_elementary_sum(std::mt19937_64& rng) {
  const int l = static_cast<int>(uniform(rng, 1, 3));
  std::vector<int> u, p;
  for (int j = 0; j < l; ++j) {
    u.push_back(static_cast<int>(uniform(rng, 1, 3)));
    p.push_back(static_cast<int>(uniform(rng, 0, 4)));
  }
  return ElementarySum(std::move(u), std::move(p));
}

NestedSum random_nested_sum(std::mt19937_64& rng) {
  for (;;) {
    const long delta = uniform(rng, 1, 3);
    const Int d = lcm_upto(delta);
    const int l = static_cast<int>(uniform(rng, 1, 3));
    std::vector<DeltaNormal> factors;
    for (int j = 0; j < l; ++j) {
      // Fraction part: 1-2 poles, orders <= 2, shifts <= 3; coefficients
      // A = k / D^{M-m} so every Delta-normal contract holds by construction.
      const int cap = static_cast<int>(uniform(rng, 1, 2));
      DeltaNormal r(delta, cap);
      const int n_poles = static_cast<int>(uniform(rng, 1, 2));
      for (int t = 0; t < n_poles; ++t) {
        const long alpha = uniform(rng, 0, 3);
        const int order = static_cast<int>(uniform(rng, 1, cap));
        long k = uniform(rng, -3, 3);
        if (k == 0) k = 1;
        r.add_fraction(alpha, order, Rat(k) / Rat(pow_int(d, cap - order)));
      }
      // Occasional polynomial part on non-leading levels (degree <= 1).
      if (j > 0 && uniform(rng, 0, 2) == 0) {
        std::vector<Rat> b;
        const int deg = static_cast<int>(uniform(rng, 0, 1));
        for (int t = 0; t <= deg; ++t)
          b.push_back(Rat(uniform(rng, -2, 2)) / Rat(pow_int(d, cap)));
        r.add_poly(IntegerValuedPolynomial(std::move(b)));
      }
      if (r.is_zero()) r.add_fraction(0, 1, Rat(pow_int(d, cap - 1)));
      factors.push_back(std::move(r));
    }
    NestedSum s(std::move(factors));
    if (s.factors.front().index() >= 0) continue;
    if (check_indices_condition(s).has_value()) continue;
    bool contracts = true;
    for (const auto& f : s.factors) contracts = contracts && f.check_contract();
    if (!contracts) continue;
    return s;
  }
}

}  // namespace zetaform
