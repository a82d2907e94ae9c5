#pragma once

#include "zetaform/elementary.hpp"
#include "zetaform/integral.hpp"
#include "zetaform/linear_form.hpp"
#include "zetaform/reduction.hpp"
#include "zetaform/series_window.hpp"
#include "zetaform/summation.hpp"

namespace zetaform {

/// Direct DP expansion of an elementary sum through z^order (coefficients of
/// z^0..z^order); independent of the Lemma-1 decomposition path.
SeriesWindow elementary_series(const ElementarySum& e, long order);

/// Expansion of a linear form sum_s P_s(w) Le_s(z) + free(w) through z^order.
/// Throws if any negative power of z survives.
SeriesWindow linear_form_series(const LinearForm& form, long order);

/// Direct prefix-sum DP expansion of sum z^{n1-1} R_1(n1) sum R_2(n2) ...
/// through z^order; independent of the reduction path.
SeriesWindow nested_sum_series(const NestedSum& s, long order);

/// Direct DP expansion of the coupled sum S(z) of the integral family:
///   prod Gamma(b_i-a_i)/prod Gamma(c_j) * sum z^{n1-1} prod couplings/denoms,
/// with coupling (n_j - n_{j+1} + 1)...(n_j - n_{j+1} + c_j - 1), n_{l+1} = 1.
/// Requires every c_j >= 1. O(levels * order^2) exact operations.
SeriesWindow coupled_sum_series(const IntegralParams& p, long order);

/// Exact series of the integral itself by termwise Beta-moment integration
/// over the geometric expansion of each denominator factor. Fully independent
/// of the Lemma 4 machinery; handles c_j = 0.
SeriesWindow integral_series(const IntegralParams& p, long order);

/// Numeric value of the coupled sum at z = 1 by streaming the terms through
/// tail extrapolation. Requires every c_j >= 1 and convergence at 1.
SumResult coupled_value_at_1(const IntegralParams& p, const PrecisionContext& ctx);

/// Numeric value of the family at z = 1 computed through the Theorem 1 shift
/// expansion: rewrites S(1) as sum coef * S_term(1) over the shifted-parameter
/// terms, collapses c = 0 groups, and evaluates each resulting coupled sum.
/// Throws if any piece fails to stabilize.
BigFloat integral_value_at_1(const IntegralParams& p, const ShiftVector& d,
                             const PrecisionContext& ctx);

}  // namespace zetaform
