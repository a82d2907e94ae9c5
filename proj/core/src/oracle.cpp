#include "zetaform/oracle.hpp"

#include <stdexcept>
#include <vector>

#include "zetaform/polylog.hpp"

namespace zetaform {

SeriesWindow elementary_series(const ElementarySum& e, long order) {
  const int l = e.depth();
  const long n_max = order + 1;  // z^{n1-1}, n1 = 1..order+1
  // prefix[n-1]: inner chain value for the levels below the current one.
  std::vector<Rat> prefix(n_max, Rat(1));
  for (int j = l - 1; j >= 1; --j) {
    Rat running(0);
    for (long n = 1; n <= n_max; ++n) {
      running += prefix[n - 1] / Rat(pow_int(Int(n + e.p[j]), e.u[j]));
      prefix[n - 1] = running;
    }
  }
  std::vector<Rat> coeffs(n_max);
  for (long n = 1; n <= n_max; ++n)
    coeffs[n - 1] = prefix[n - 1] / Rat(pow_int(Int(n + e.p[0]), e.u[0]));
  return SeriesWindow(0, std::move(coeffs));
}

SeriesWindow linear_form_series(const LinearForm& form, long order) {
  long max_deg = form.free_term().degree();
  for (const auto& [s, poly] : form.terms())
    max_deg = std::max(max_deg, static_cast<long>(poly.degree()));
  if (max_deg < 0) max_deg = 0;

  SeriesWindow out;
  out.add_coeff(0, Rat(0));
  for (const auto& [s, poly] : form.terms()) {
    std::vector<Rat> le = le_series(s, order + max_deg);
    for (int k = 0; k <= poly.degree(); ++k) {
      const Rat& c = poly.coeff(k);
      if (c == 0) continue;
      // c * w^k * Le_s(z): shift every z^n down to z^{n-k}.
      for (long n = 1; n <= order + k; ++n)
        out.add_coeff(n - k, c * le[n - 1]);
    }
  }
  for (int k = 0; k <= form.free_term().degree(); ++k) {
    const Rat& c = form.free_term().coeff(k);
    if (c != 0) out.add_coeff(-k, c);
  }
  return out.nonnegative_part(order);
}

SeriesWindow nested_sum_series(const NestedSum& s, long order) {
  const int l = s.depth();
  const long n_max = order + 1;
  // prefix[n-1]: running inner-chain value; starts as the empty chain (= 1).
  std::vector<Rat> prefix(n_max, Rat(1));
  for (int j = l - 1; j >= 1; --j) {
    Rat running(0);
    for (long n = 1; n <= n_max; ++n) {
      running += s.factors[j].evaluate(Rat(n)) * prefix[n - 1];
      prefix[n - 1] = running;
    }
  }
  std::vector<Rat> coeffs(n_max);
  for (long n = 1; n <= n_max; ++n)
    coeffs[n - 1] = s.factors[0].evaluate(Rat(n)) * prefix[n - 1];
  return SeriesWindow(0, std::move(coeffs));
}

namespace {

/// coupling(x, y) = (x - y + 1)...(x - y + c - 1).
Rat coupling(long x, long y, long c) {
  Rat v(1);
  for (long r = 1; r <= c - 1; ++r) v *= Rat(x - y + r);
  return v;
}

/// prod over variables in group j of (n + a_i - 1)...(n + b_i - 2).
Rat group_denominator(const IntegralParams& p, int j, long n) {
  Rat v(1);
  for (int i = p.group_begin(j); i < p.group_ends[j]; ++i)
    for (long t = p.a[i] - 1; t <= p.b[i] - 2; ++t) v *= Rat(n + t);
  return v;
}

}  // namespace

SeriesWindow coupled_sum_series(const IntegralParams& p, long order) {
  p.check_well_formed();
  const int l = p.levels();
  for (long cj : p.c)
    if (cj < 1)
      throw std::invalid_argument("coupled_sum_series: c_j = 0 (collapse first)");
  const long n_max = order + 1;

  Rat prefactor(1);
  for (int i = 0; i < p.m; ++i) prefactor *= Rat(factorial(p.b[i] - p.a[i] - 1));
  for (long cj : p.c) prefactor /= Rat(factorial(cj - 1));

  // h[n-1] for the current level, built from the inside out.
  std::vector<Rat> h(n_max);
  for (long n = 1; n <= n_max; ++n)
    h[n - 1] = coupling(n, 1, p.c[l - 1]) / group_denominator(p, l - 1, n);
  for (int j = l - 2; j >= 0; --j) {
    std::vector<Rat> next(n_max);
    for (long n = 1; n <= n_max; ++n) {
      Rat acc(0);
      for (long m = 1; m <= n; ++m) acc += coupling(n, m, p.c[j]) * h[m - 1];
      next[n - 1] = acc / group_denominator(p, j, n);
    }
    h = std::move(next);
  }
  for (long n = 1; n <= n_max; ++n) h[n - 1] *= prefactor;
  return SeriesWindow(0, std::move(h));
}

SeriesWindow integral_series(const IntegralParams& p, long order) {
  p.check_well_formed();
  const int l = p.levels();

  std::vector<Rat> coeffs(order + 1, Rat(0));
  std::vector<long> k(l, 0);
  // Recursive enumeration of k with sum <= order; for each, the integral of
  // the monomial term is a product of Beta values.
  auto rec = [&](auto&& self, int j, long used, const Rat& weight) -> void {
    if (j == l) {
      // Exponent added to x_i: E_i = sum over groups j' >= group(i) of k_{j'}.
      Rat term = weight;
      long suffix = 0;
      for (int jj = l - 1; jj >= 0; --jj) {
        suffix += k[jj];
        for (int i = p.group_begin(jj); i < p.group_ends[jj]; ++i) {
          // B(a_i + E, b_i - a_i) = (a+E-1)! (b-a-1)! / (b+E-1)!.
          term *= Rat(factorial(p.a[i] + suffix - 1) *
                      factorial(p.b[i] - p.a[i] - 1)) /
                  Rat(factorial(p.b[i] + suffix - 1));
        }
      }
      coeffs[used] += term;
      return;
    }
    for (k[j] = 0; used + k[j] <= order; ++k[j]) {
      if (p.c[j] == 0 && k[j] > 0) break;  // (1 - zX)^0 contributes only k = 0
      Rat w = weight * Rat(binomial(k[j] + p.c[j] - 1, p.c[j] - 1));
      self(self, j + 1, used + k[j], w);
    }
    k[j] = 0;
  };
  rec(rec, 0, 0, Rat(1));
  return SeriesWindow(0, std::move(coeffs));
}

namespace {

/// Streams the terms of the coupled sum at z = 1 with O(levels * c^2) MPFR
/// operations per term: denominators update incrementally and the couplings
/// are expanded in powers of the inner index against per-level prefix sums.
class CoupledAt1Terms : public SeriesTerms {
 public:
  CoupledAt1Terms(const IntegralParams& p, mpfr_prec_t prec)
      : p_(p), prec_(prec), n_(0), prefactor_(1L, prec) {
    const int l = p.levels();
    Rat pre(1);
    for (int i = 0; i < p.m; ++i) pre *= Rat(factorial(p.b[i] - p.a[i] - 1));
    for (long cj : p.c) pre /= Rat(factorial(cj - 1));
    prefactor_ = BigFloat(pre, prec);
    denom_.assign(l, BigFloat(1L, prec));
    inner_coupling_ = BigFloat(Rat(factorial(p.c[l - 1] - 1)), prec);
    // prefix_[j][t] = sum_{m<=n} m^t h_j(m), t < c_{j-1}; kept for j >= 1.
    prefix_.resize(l);
    for (int j = 1; j < l; ++j)
      prefix_[j].assign(p.c[j - 1], BigFloat(0L, prec));
    long cmax = 1;
    for (long cj : p.c) cmax = std::max(cmax, cj);
    powers_.assign(cmax, BigFloat(1L, prec));
    beta_.reserve(cmax);
  }

  BigFloat next() override {
    ++n_;
    const int l = p_.levels();
    const BigFloat bn(n_, prec_);
    // Incremental updates: denom_j(n)/denom_j(n-1) = prod (n+b-2)/(n-1+a-1);
    // inner coupling (n)(n+1)...(n+c-2) gains (n+c-2)/(n-1) per step.
    for (int j = 0; j < l; ++j) {
      if (n_ == 1) {
        denom_[j] = BigFloat(group_denominator(p_, j, 1), prec_);
      } else {
        for (int i = p_.group_begin(j); i < p_.group_ends[j]; ++i) {
          denom_[j] *= BigFloat(n_ + p_.b[i] - 2, prec_);
          denom_[j] /= BigFloat(n_ + p_.a[i] - 2, prec_);
        }
      }
    }
    if (n_ > 1 && p_.c[l - 1] > 1) {
      inner_coupling_ *= BigFloat(n_ + p_.c[l - 1] - 2, prec_);
      inner_coupling_ /= BigFloat(n_ - 1, prec_);
    }
    // powers_[t] = n^t.
    for (size_t t = 1; t < powers_.size(); ++t) powers_[t] = powers_[t - 1] * bn;

    BigFloat h = inner_coupling_ / denom_[l - 1];
    for (int j = l - 1; j >= 1; --j) {
      // Fold h_{j}(n) (currently the inner level's value) into its prefix sums,
      // then form h_{j-1}(n) from the expanded coupling.
      const long deg = p_.c[j - 1] - 1;
      for (long t = 0; t <= deg; ++t) prefix_[j][t] += powers_[t] * h;
      expand_coupling(j - 1);
      BigFloat acc(0L, prec_);
      for (long t = 0; t <= deg; ++t) acc += beta_[t] * prefix_[j][t];
      h = acc / denom_[j - 1];
    }
    return prefactor_ * h;
  }

 private:
  /// beta_[t] = coefficient of y^t in prod_{r=1}^{c_j-1} ((n + r) - y).
  void expand_coupling(int j) {
    beta_.assign(1, BigFloat(1L, prec_));
    for (long r = 1; r <= p_.c[j] - 1; ++r) {
      const BigFloat root(n_ + r, prec_);
      beta_.push_back(BigFloat(0L, prec_));
      for (size_t t = beta_.size() - 1; t > 0; --t)
        beta_[t] = beta_[t] * root - beta_[t - 1];
      beta_[0] *= root;
    }
  }

  IntegralParams p_;
  mpfr_prec_t prec_;
  long n_;
  BigFloat prefactor_;
  BigFloat inner_coupling_{64};
  std::vector<BigFloat> denom_;
  std::vector<std::vector<BigFloat>> prefix_;
  std::vector<BigFloat> powers_;
  std::vector<BigFloat> beta_;
};

}  // namespace

SumResult coupled_value_at_1(const IntegralParams& p, const PrecisionContext& ctx) {
  p.check_well_formed();
  for (long cj : p.c)
    if (cj < 1)
      throw std::invalid_argument("coupled_value_at_1: c_j = 0 (collapse first)");
  CoupledAt1Terms terms(p, ctx.work_bits());
  return sum_with_tail_extrapolation(terms, ctx.tolerance(), ctx.work_bits(),
                                     p.levels() - 1);
}

BigFloat integral_value_at_1(const IntegralParams& p, const ShiftVector& d,
                             const PrecisionContext& ctx) {
  BigFloat total(0L, ctx.work_bits());
  auto [w_power, terms] = apply_shift(p, d);
  (void)w_power;  // w = 1 at z = 1
  for (const ShiftedTerm& term : terms) {
    auto [scalar, cp] = collapse_zero_c(term.params);
    const Rat outer = term.coef * scalar;
    if (outer == 0) continue;
    if (cp.levels() == 0) {
      total += BigFloat(outer, ctx.work_bits());
      continue;
    }
    SumResult r = coupled_value_at_1(cp, ctx);
    if (!r.stabilized)
      throw std::runtime_error("integral_value_at_1: coupled sum did not stabilize");
    total += BigFloat(outer, ctx.work_bits()) * r.value;
  }
  return total;
}

}  // namespace zetaform
