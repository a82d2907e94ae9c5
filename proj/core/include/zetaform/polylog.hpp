#pragma once

#include <optional>
#include <vector>

#include "zetaform/multi_index.hpp"
#include "zetaform/rational.hpp"
#include "zetaform/summation.hpp"

namespace zetaform {

struct PrecisionContext {
  int digits = 40;           // requested decimal digits
  long truncation_order = 64;  // initial truncation for doubling summation
  double stabilization = 2.0;  // growth factor guard (doubling)

  mpfr_prec_t work_bits() const { return BigFloat::bits_for_digits(digits + 10); }
  BigFloat tolerance() const {
    BigFloat t(1L, work_bits());
    BigFloat ten(10L, work_bits());
    return t / ten.pow_si(digits);
  }
};

/// Exact series coefficients of z^1..z^N of the generalized (non-strict)
/// polylogarithm Le_s(z) = sum_{n1 >= n2 >= ... >= nl >= 1} z^{n1} prod n_j^{-s_j}.
std::vector<Rat> le_series(const MultiIndex& s, long n_terms);

/// Recognizes s = (<2>_k, 1); the value at z = 1 is then 2 zeta(2k+1).
std::optional<int> special_value_form(const MultiIndex& s);

/// zeta(k) for integer k >= 2 via Euler-Maclaurin.
BigFloat zeta_numeric(int k, const PrecisionContext& ctx);

/// Le_s at rational z in [0,1]. z = 1 requires s_1 >= 2.
BigFloat le_numeric(const MultiIndex& s, const Rat& z, const PrecisionContext& ctx);

}  // namespace zetaform
