#include "zetaform/summation.hpp"

#include <vector>

namespace zetaform {

namespace {

// Eliminates the tail model over the checkpoint window ending at index k_end
// (checkpoints[k] = partial sum through 2^k terms) and returns the limit.
// Each pass of S_k <- (2^j S_{k+1} - S_k) / (2^j - 1) kills a pure 2^{-jk}
// term and lowers the k-degree of poly(k) 2^{-jk} terms by one, so
// (log_power + 1) passes per scale j remove the whole model; unlike a direct
// Vandermonde solve, every step amplifies checkpoint noise by at most
// (2^j + 1)/(2^j - 1).
BigFloat eliminate_tail(const std::vector<BigFloat>& checkpoints, int k_end,
                        int model_depth, int log_power, mpfr_prec_t prec) {
  const int width = 1 + model_depth * (log_power + 1);
  const int k_lo = k_end - width + 1;
  std::vector<BigFloat> est;
  est.reserve(width);
  for (int k = k_lo; k <= k_end; ++k) {
    BigFloat v(0L, prec);
    mpfr_set(v.raw(), checkpoints[k].raw(), MPFR_RNDN);
    est.push_back(std::move(v));
  }
  for (int j = 1; j <= model_depth; ++j) {
    const BigFloat pj = BigFloat(2L, prec).pow_si(j);
    const BigFloat denom = pj - BigFloat(1L, prec);
    for (int pass = 0; pass <= log_power; ++pass) {
      for (size_t i = 0; i + 1 < est.size(); ++i)
        est[i] = (pj * est[i + 1] - est[i]) / denom;
      est.pop_back();
    }
  }
  return est.front();
}

}  // namespace

SumResult stabilized_sum(SeriesTerms& terms, const BigFloat& tolerance,
                         long initial_terms, long max_terms) {
  const mpfr_prec_t prec = tolerance.precision();
  SumResult res;
  BigFloat sum(0L, prec);
  long n = 0;
  long target = initial_terms < 1 ? 1 : initial_terms;
  BigFloat prev(0L, prec);
  bool have_prev = false;
  while (n < max_terms) {
    for (; n < target && n < max_terms; ++n) sum += terms.next();
    if (have_prev) {
      BigFloat diff = (sum - prev).abs();
      BigFloat scale = sum.abs() + BigFloat(1L, prec);
      res.achieved = diff;
      if (diff <= tolerance * scale) {
        res.value = sum;
        res.stabilized = true;
        res.terms_used = n;
        return res;
      }
    }
    prev = sum;
    have_prev = true;
    target *= 2;
  }
  res.value = sum;
  res.terms_used = n;
  return res;
}

SumResult sum_with_tail_extrapolation(SeriesTerms& terms, const BigFloat& tolerance,
                                      mpfr_prec_t work_prec, int log_power,
                                      long max_terms) {
  const mpfr_prec_t solve_prec = work_prec * 2;
  const int k0 = 4;
  // Bits demanded by the tolerance. The unmodeled scale 2^{-(J+1)k} limits
  // accuracy to roughly (J+1) * (window midpoint) bits, which is maximized per
  // term cost at J + 1 ~ sqrt(2 * bits / (log_power + 1)).
  long bits = 8;
  if (!tolerance.is_zero() && mpfr_get_exp(tolerance.raw()) < 0)
    bits = -mpfr_get_exp(tolerance.raw()) + 8;
  int depth_cap = 1;
  while (static_cast<long>(depth_cap + 1) * (depth_cap + 1) * (log_power + 1) <
         2 * bits)
    ++depth_cap;
  SumResult res;
  BigFloat sum(0L, work_prec);
  std::vector<BigFloat> checkpoints;
  long n = 0;
  BigFloat prev_estimate(0L, work_prec);
  bool have_prev = false;
  for (int k = 0; (1L << k) <= max_terms; ++k) {
    const long target = 1L << k;
    for (; n < target; ++n) sum += terms.next();
    checkpoints.push_back(sum);
    int depth = (k - k0) / (log_power + 1);
    if (depth < 1) continue;
    if (depth > depth_cap) depth = depth_cap;
    BigFloat estimate = eliminate_tail(checkpoints, k, depth, log_power, solve_prec);
    if (have_prev) {
      BigFloat diff = (estimate - prev_estimate).abs();
      BigFloat scale = estimate.abs() + BigFloat(1L, work_prec);
      res.achieved = diff;
      if (diff <= tolerance * scale) {
        res.value = estimate;
        res.stabilized = true;
        res.terms_used = n;
        return res;
      }
    }
    prev_estimate = estimate;
    have_prev = true;
  }
  res.value = have_prev ? prev_estimate : sum;
  res.terms_used = n;
  return res;
}

}  // namespace zetaform
