#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zetaform/delta_normal.hpp"
#include "zetaform/elementary.hpp"

namespace zetaform {

/// Nested sum  sum_{n1>=1} z^{n1-1} R_1(n1) sum_{n2<=n1} R_2(n2) ...
/// All factors share the same Delta.
struct NestedSum {
  std::vector<DeltaNormal> factors;

  NestedSum() = default;
  explicit NestedSum(std::vector<DeltaNormal> f);

  int depth() const { return static_cast<int>(factors.size()); }
  long delta() const { return factors.front().delta(); }
  /// Sum of the factor pole caps (the M_j of Lemma 3).
  long total_pole_cap() const;
};

/// One output of the reduction: lambda * (nested sum with all proper factors).
struct ReducedTerm {
  Rat lambda;
  NestedSum sum;
  long weight_drop = 0;  // w_i = sum M_j(in) - sum M_j(out); D_Delta^{w_i} lambda in Z
};

/// Checks Eq. (IndicesSum): sum_{j<=j1}(I(R_j)+1) <= 0 and
/// sum_{j1<=j<=j2}(I(R_j)+1) <= Delta. Returns the first violating (j1, j2)
/// pair (1-based; the first form is reported as (1, j1)), or nullopt.
std::optional<std::pair<int, int>> check_indices_condition(const NestedSum& s);

/// Lemma 3: rewrites s as sum_i lambda_i * F_i with every factor proper
/// (index < 0) and Delta-normal. Throws std::invalid_argument with the
/// witnessing pair when the preconditions fail.
std::vector<ReducedTerm> reduce(const NestedSum& s);

/// Expands a nested sum with all-proper factors into elementary sums:
/// value(s) = sum coef * value(E). Cartesian product of the per-level
/// partial-fraction terms.
std::vector<std::pair<Rat, ElementarySum>> to_elementary(const NestedSum& s);

}  // namespace zetaform
