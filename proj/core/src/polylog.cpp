#include "zetaform/polylog.hpp"

#include <stdexcept>

namespace zetaform {

std::vector<Rat> le_series(const MultiIndex& s, long n_terms) {
  if (s.depth() < 1) throw std::invalid_argument("le_series: empty index");
  if (n_terms < 1) throw std::invalid_argument("le_series: need N >= 1");
  const int l = s.depth();
  // prefix[n-1] holds sum over the inner l-1 chain up to n; built inside out.
  std::vector<Rat> prefix(n_terms, Rat(1));
  for (int j = l - 1; j >= 1; --j) {
    Rat running(0);
    for (long n = 1; n <= n_terms; ++n) {
      running += prefix[n - 1] / Rat(pow_int(Int(n), s.entries[j]));
      prefix[n - 1] = running;
    }
  }
  std::vector<Rat> coeffs(n_terms);
  for (long n = 1; n <= n_terms; ++n)
    coeffs[n - 1] = prefix[n - 1] / Rat(pow_int(Int(n), s.entries[0]));
  return coeffs;
}

std::optional<int> special_value_form(const MultiIndex& s) {
  const int l = s.depth();
  if (l < 1 || s.entries[l - 1] != 1) return std::nullopt;
  for (int j = 0; j + 1 < l; ++j)
    if (s.entries[j] != 2) return std::nullopt;
  return l - 1;
}

namespace {

std::vector<Rat> bernoulli_numbers(int count) {
  // B_0 .. B_{count-1} via the defining recurrence.
  std::vector<Rat> b(count);
  for (int m = 0; m < count; ++m) {
    if (m == 0) {
      b[0] = 1;
      continue;
    }
    Rat acc(0);
    for (int j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * b[j];
    b[m] = -acc / Rat(m + 1);
  }
  return b;
}

}  // namespace

BigFloat zeta_numeric(int k, const PrecisionContext& ctx) {
  if (k < 2) throw std::invalid_argument("zeta_numeric: need k >= 2");
  if (ctx.digits < 10) throw std::invalid_argument("zeta_numeric: digits >= 10");
  const mpfr_prec_t prec = ctx.work_bits() + 64;
  const long cut = 2 * ctx.digits + 10;
  const int corrections = ctx.digits;
  BigFloat sum(0L, prec);
  for (long n = 1; n < cut; ++n) {
    BigFloat t(static_cast<long>(n), prec);
    sum += BigFloat(1L, prec) / t.pow_si(k);
  }
  BigFloat nf(cut, prec);
  // Euler-Maclaurin boundary and correction terms at n = cut.
  sum += nf.pow_si(1 - k) / BigFloat(static_cast<long>(k - 1), prec);
  sum += nf.pow_si(-k) / BigFloat(2L, prec);
  std::vector<Rat> bern = bernoulli_numbers(2 * corrections + 1);
  Rat rising(1);  // k (k+1) ... (k + 2i - 2)
  for (int i = 1; i <= corrections; ++i) {
    if (i == 1)
      rising = Rat(k);
    else
      rising *= Rat(k + 2 * i - 3) * Rat(k + 2 * i - 2);
    Rat coeff = bern[2 * i] / Rat(factorial(2 * i)) * rising;
    sum += BigFloat(coeff, prec) * nf.pow_si(-k - 2 * i + 1);
  }
  return sum;
}

namespace {

/// Terms of Le_s(z) for n = 1, 2, ...: z^n n^{-s1} * (inner non-strict chain),
/// maintained by one prefix sum per inner level.
class LeTerms : public SeriesTerms {
 public:
  LeTerms(const MultiIndex& s, const Rat& z, mpfr_prec_t prec)
      : s_(s), z_(z, prec), zpow_(1L, prec), prec_(prec),
        prefix_(s.depth() > 1 ? s.depth() - 1 : 0, BigFloat(0L, prec)) {}

  BigFloat next() override {
    ++n_;
    zpow_ *= z_;
    BigFloat nf(n_, prec_);
    const int l = s_.depth();
    BigFloat inner(1L, prec_);
    for (int j = l - 1; j >= 1; --j) {
      prefix_[j - 1] += inner / nf.pow_si(s_.entries[j]);
      inner = prefix_[j - 1];
    }
    return zpow_ * inner / nf.pow_si(s_.entries[0]);
  }

 private:
  MultiIndex s_;
  BigFloat z_, zpow_;
  mpfr_prec_t prec_;
  std::vector<BigFloat> prefix_;
  long n_ = 0;
};

}  // namespace

BigFloat le_numeric(const MultiIndex& s, const Rat& z, const PrecisionContext& ctx) {
  if (s.depth() < 1) throw std::invalid_argument("le_numeric: empty index");
  if (z < 0 || z > 1) throw std::domain_error("le_numeric: z outside [0,1]");
  const bool at_one = (z == 1);
  if (at_one && s.entries[0] < 2)
    throw std::domain_error("le_numeric: divergent at z = 1 with s1 = 1");
  const mpfr_prec_t prec = ctx.work_bits() + 64;
  LeTerms terms(s, z, prec);
  SumResult res;
  if (at_one) {
    res = sum_with_tail_extrapolation(terms, ctx.tolerance(), prec, s.depth() - 1);
  } else {
    res = stabilized_sum(terms, ctx.tolerance(), ctx.truncation_order, 1L << 24);
  }
  if (!res.stabilized)
    throw std::runtime_error("le_numeric: summation failed to stabilize");
  return res.value;
}

}  // namespace zetaform
