#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zetaform/linear_form.hpp"

namespace zetaform {

/// Shifted nested sum
///   sum_{n1 >= ... >= nl >= 1} z^{n1-1} prod_j (n_j + p_j)^{-u_j},
/// with u_j >= 1 and p_j >= 0.
struct ElementarySum {
  std::vector<int> u;
  std::vector<int> p;

  ElementarySum() = default;
  ElementarySum(std::vector<int> exps, std::vector<int> shifts);

  int depth() const { return static_cast<int>(u.size()); }
  int weight() const;     // m = w(u)
  int max_shift() const;  // P = max p_j

  bool operator<(const ElementarySum& o) const {
    return std::tie(u, p) < std::tie(o.u, o.p);
  }
  std::string to_string() const;
};

/// Coefficients of 1/((x+p1)^{u1} (x+p2)^{u2}) =
///   sum_k A_k/(x+p1)^k + sum_k B_k/(x+p2)^k, p1 != p2.
/// A is indexed k = 1..u1 (A[k-1]), B likewise.
std::pair<std::vector<Rat>, std::vector<Rat>> partial_fraction_pair(int u1, int u2,
                                                                    int p1, int p2);

/// Closed-form height bound max(l! (m 2^m)^{l-1} P^l, 1) for the polynomials
/// of decompose(E).
Rat height_bound(const ElementarySum& e);

/// Shared memo table for one or many decomposition runs.
using DecomposeMemo = std::map<ElementarySum, LinearForm>;

/// Decomposes E into a linear form in generalized polylogarithms; exact as a
/// formal power series in z.
LinearForm decompose(const ElementarySum& e);
LinearForm decompose(const ElementarySum& e, DecomposeMemo& memo);

struct Lemma1Report {
  bool denominators_ok = true;
  bool height_ok = true;
  bool series_ok = true;
  long first_series_mismatch = -1;
  bool pass() const { return denominators_ok && height_ok && series_ok; }
};

/// Checks the denominator inclusion D_P^{m-w(s)} P_s in Z[z], the height bound,
/// and series equality against the direct DP oracle through z^order.
Lemma1Report verify_lemma1(const ElementarySum& e, long order = 60);
Lemma1Report verify_lemma1(const ElementarySum& e, const LinearForm& form, long order);

}  // namespace zetaform
