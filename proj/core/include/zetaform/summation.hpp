#pragma once

#include <functional>
#include <vector>

#include "zetaform/bigfloat.hpp"

namespace zetaform {

/// Incremental stream of the terms t_1, t_2, ... of a series.
class SeriesTerms {
 public:
  virtual ~SeriesTerms() = default;
  /// Term for the next n (called with n = 1, 2, 3, ... in order).
  virtual BigFloat next() = 0;
};

struct SumResult {
  BigFloat value{64};
  /// Agreement between the last two estimates, as an absolute error proxy.
  BigFloat achieved{64};
  bool stabilized = false;
  long terms_used = 0;
};

/// Plain doubling summation: stops when two successive partial sums (at N and
/// 2N) agree to tolerance. Suitable for geometrically convergent series.
SumResult stabilized_sum(SeriesTerms& terms, const BigFloat& tolerance,
                         long initial_terms, long max_terms);

/// Summation for series whose partial sums obey
///   S(N) = S + sum_{j >= 1} poly_q(log N) / N^j  (polynomially convergent):
/// partial sums are checkpointed at N = 2^k and the limit is recovered by
/// repeated Richardson elimination of the k^q 2^{-jk} tail scales. The model
/// depth and checkpoint count are sized from the tolerance. `log_power` is the
/// maximal power q of log N in the tail (0 for pure power tails).
/// Stabilization compares successive elimination windows; `achieved` reports
/// their agreement. Diverging input fails to stabilize.
SumResult sum_with_tail_extrapolation(SeriesTerms& terms, const BigFloat& tolerance,
                                      mpfr_prec_t work_prec, int log_power,
                                      long max_terms = 1L << 26);

}  // namespace zetaform
