#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zetaform/bigfloat.hpp"
#include "zetaform/linear_form.hpp"
#include "zetaform/polylog.hpp"
#include "zetaform/reduction.hpp"

namespace zetaform {

/// Parameters of the integral family
///   S(z) = int_{[0,1]^m} prod x_i^{a_i-1}(1-x_i)^{b_i-a_i-1}
///          / prod_j (1 - z x_1...x_{r_j})^{c_j} dx,
/// with variable groups (r_{j-1}, r_j].
struct IntegralParams {
  int m = 0;
  std::vector<int> group_ends;  // r_1 < ... < r_l = m
  std::vector<long> a, b;       // per variable, b_i > a_i >= 1
  std::vector<long> c;          // per group, c_j >= 0 (0 allowed per the Remark)

  int levels() const { return static_cast<int>(group_ends.size()); }
  int group_begin(int j) const { return j == 0 ? 0 : group_ends[j - 1]; }
  long q(int j) const;      // sum of b_i - a_i over group j
  long big_p() const;       // P = max b_i - 2
  long p_min(int j) const;  // min a_i - 1 over group j
  long p_max(int j) const;  // max b_i - 2 over group j

  void check_well_formed() const;  // throws on malformed shape
  bool operator==(const IntegralParams& o) const = default;
};

struct ShiftVector {
  std::vector<long> d;  // per group, d_j >= 0
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

/// Lemma 4 inequalities with the given Delta playing the role of P.
ValidationReport validate_lemma4(const IntegralParams& p, long delta);
/// Theorem 1 inequalities for (params, d), including the shift invariants.
ValidationReport validate_theorem1(const IntegralParams& p, const ShiftVector& d);
/// Delta = max over groups j and i in group j of b_i - sum_{k>=j} d_k - 2.
long theorem1_delta(const IntegralParams& p, const ShiftVector& d);

/// Removes groups with c_j = 0: a trailing such group integrates to a Beta
/// factor (rational scalar), an inner one merges into the following group.
/// Returns the scalar and the collapsed parameters (which may have no groups
/// left, in which case S(z) is the scalar).
std::pair<Rat, IntegralParams> collapse_zero_c(const IntegralParams& p);

/// Lemma 4 proof: S(z) as a signed sum over k in prod [0, c_j - 1] of nested
/// sums with Delta-normal factors. Requires all c_j >= 1. The per-k scalar is
/// exactly (-1)^{sum k_j}.
std::vector<std::pair<int, NestedSum>> sum_representation(const IntegralParams& p,
                                                          long delta);

struct ShiftedTerm {
  Rat coef;               // signed integer coefficient
  IntegralParams params;  // shifted a', same b-profile offsets, reduced c'
};

/// Theorem 1 proof: expands the (1-(1-z x...))^{d_j} factors binomially.
/// All outputs share the prefactor w^{sum d_j}, returned separately.
std::pair<long, std::vector<ShiftedTerm>> apply_shift(const IntegralParams& p,
                                                      const ShiftVector& d);

/// Full pipeline: validate -> apply_shift -> sum_representation -> reduce ->
/// to_elementary -> decompose -> aggregate, scaled by w^{sum d}.
LinearForm decompose_integral(const IntegralParams& p, const ShiftVector& d);

/// The I_{2l+1,n} family: m = 2l+1, l+1 groups ending at (2,4,...,2l,2l+1),
/// a_i = n+1, b_i = 2n+2, c_j = n+1, shift d = (0,...,0,n).
std::pair<IntegralParams, ShiftVector> vasilyev_params(int l, long n);

struct StructureReport {
  bool indices_ok = true;       // all indices are <2>_k,1 or 1,<2>_k,1
  bool vanishing_ok = true;     // P_0(1) = 0 and T_k(1) = 0
  bool coarse_denominator_ok = true;  // D_n^{2l+1} clears every polynomial
  bool sharp_denominator_ok = true;   // D_n^{m-w(s)} clears each P_s
  std::vector<std::string> notes;
  bool pass() const {
    return indices_ok && vanishing_ok && coarse_denominator_ok &&
           sharp_denominator_ok;
  }
};

StructureReport vasilyev_structure_check(const LinearForm& form, int l, long n);

struct VasilyevValue {
  std::vector<Rat> zeta_coeff;  // coefficient of zeta(2k+1), k = 1..l (= 2 P_k(1))
  Rat constant;                 // free(1)
  BigFloat numeric{64};         // sum of the combination, at ctx precision
};

/// S(1) as a rational combination of zeta(3), ..., zeta(2l+1) plus a rational
/// constant, with its numeric value. Throws if the structure check fails.
VasilyevValue vasilyev_value(int l, long n, const PrecisionContext& ctx);
VasilyevValue vasilyev_value(const LinearForm& form, int l, long n,
                             const PrecisionContext& ctx);

}  // namespace zetaform
