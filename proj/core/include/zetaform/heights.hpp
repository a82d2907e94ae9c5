#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zetaform/integral.hpp"

namespace zetaform {

/// Linear-in-n parameter profile: a_i = alpha_i n + alpha_i', b_i = beta_i n +
/// beta_i', c_j = gamma_j n + gamma_j'.
struct AsymptoticParams {
  std::vector<int> group_ends;
  std::vector<long> alpha, alpha_p;  // per variable
  std::vector<long> beta, beta_p;
  std::vector<long> gamma, gamma_p;  // per group

  int levels() const { return static_cast<int>(group_ends.size()); }
  int vars() const { return group_ends.empty() ? 0 : group_ends.back(); }
  int group_begin(int j) const { return j == 0 ? 0 : group_ends[j - 1]; }

  long h(int j) const;  // min alpha_i over group j
  long H(int j) const;  // max beta_i over group j

  /// Throws if the slopes are not positive or shapes mismatch.
  void check_well_formed() const;

  /// Concrete parameters at a given n (checks b_i > a_i >= 1, c_j >= 0).
  IntegralParams instantiate(long n) const;

  /// The Theorem 2 preconditions c_1 <= q_1, c_{j-1} + c_j <= q_j at a given
  /// n. Reported, not enforced: some families of interest (e.g. Vasilyev)
  /// violate them in the last group while the empirical trend still holds.
  ValidationReport lemma6_preconditions(long n) const;
};

/// The I_{2l+1,n} profile: alpha = alpha' = 1, beta = beta' = 2 per variable,
/// gamma = gamma' = 1 per group, groups ending at (2, 4, ..., 2l, 2l+1).
AsymptoticParams vasilyev_profile(int l);

struct FactorialPowerBounds {
  Rat lower;  // (a+b)^{a+b} / (a^a b^b (a+b+1))
  Rat upper;  // (a+b)^{a+b} / (a^a b^b)
  Int exact;  // C(a+b, a)
};

/// Lemma 5 sandwich, with exact rational bounds (0^0 = 1 convention).
FactorialPowerBounds factorial_power_bounds(long a, long b);

/// phi(x, y) = |x+y|^{x+y} |x|^{-x}, with |t|^t = 1 at t = 0.
double phi(double x, double y);

/// The height-growth density F of Theorem 2 on the unit cube, one coordinate
/// per group. Throws if x has the wrong length or leaves [0,1].
double F(const std::vector<double>& x, const AsymptoticParams& p);

struct MaximizeResult {
  double value = 0;
  std::vector<double> argmax;
};

/// Deterministic maximization: exhaustive grid (grid points per axis, >= 2)
/// followed by coordinate pattern-search refinement to step < tol. The result
/// is never below the grid maximum.
MaximizeResult maximize_F(const AsymptoticParams& p, int grid, double tol);

struct HeightRow {
  long n = 0;
  Rat height;           // max coefficient height over the linear form
  double nth_root = 0;  // height^{1/n}
  double m_bound = 0;   // M from maximize_F
  double ratio_log = 0;  // log(height) / (n log M)
};

/// Exact heights of the Vasilyev forms for n = n_min..n_max against the
/// asymptotic constant M (computed once from the profile).
std::vector<HeightRow> empirical_height_growth(int l, long n_min, long n_max,
                                               int grid = 64, double tol = 1e-9);

/// CSV serialization: header n,height,height_nth_root,M,ratio_log.
std::string height_table_csv(const std::vector<HeightRow>& rows);

}  // namespace zetaform
