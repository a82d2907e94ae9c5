#include "zetaform/reduction.hpp"

#include <stdexcept>
#include <string>

namespace zetaform {

NestedSum::NestedSum(std::vector<DeltaNormal> f) : factors(std::move(f)) {
  if (factors.empty()) throw std::invalid_argument("NestedSum: no factors");
  for (const auto& r : factors)
    if (r.delta() != factors.front().delta())
      throw std::invalid_argument("NestedSum: mixed Delta values");
}

long NestedSum::total_pole_cap() const {
  long m = 0;
  for (const auto& r : factors) m += r.pole_cap();
  return m;
}

std::optional<std::pair<int, int>> check_indices_condition(const NestedSum& s) {
  const int l = s.depth();
  const long delta = s.delta();
  std::vector<long> idx(l);
  for (int j = 0; j < l; ++j) idx[j] = s.factors[j].index();
  for (int j1 = 1; j1 <= l; ++j1) {
    long acc = 0;
    for (int j = 1; j <= j1; ++j) acc += idx[j - 1] + 1;
    if (acc > 0) return std::make_pair(1, j1);
  }
  for (int j1 = 1; j1 <= l; ++j1) {
    long acc = 0;
    for (int j2 = j1; j2 <= l; ++j2) {
      acc += idx[j2 - 1] + 1;
      if (acc > delta) return std::make_pair(j1, j2);
    }
  }
  return std::nullopt;
}

namespace {

void reduce_impl(const NestedSum& s, const Rat& lambda, long weight_drop,
                 std::vector<ReducedTerm>& out) {
  const int l = s.depth();
  int j = -1;  // first level (0-based) with an improper factor
  for (int i = 0; i < l; ++i)
    if (s.factors[i].index() >= 0) {
      j = i;
      break;
    }
  if (j < 0) {
    out.push_back({lambda, s, weight_drop});
    return;
  }
  if (j == 0)
    throw std::logic_error("reduce: improper leading factor (I(R_1) >= 0)");

  // Split R_j into proper fraction + polynomial.
  const DeltaNormal& rj = s.factors[j];
  if (!rj.fractions().empty()) {
    NestedSum proper = s;
    proper.factors[j] = rj.fraction_only();
    reduce_impl(proper, lambda, weight_drop, out);
  }
  const IntegerValuedPolynomial p = rj.poly_only();
  if (p.is_zero()) return;

  // Polynomial branch: eliminate level j by discrete summation. The proof
  // multiplies by the integer-valued D_Delta^{M_j} Q and divides lambda by
  // D_Delta^{M_j}, which keeps all Delta-normal certificates intact.
  const long delta = s.delta();
  const int mj = rj.pole_cap();
  const Rat dpow = Rat(pow_int(lcm_upto(delta), mj));

  auto splice = [&](int drop, int target, const IntegerValuedPolynomial& q) {
    std::vector<DeltaNormal> f;
    for (int i = 0; i < s.depth(); ++i)
      if (i != drop) f.push_back(s.factors[i]);
    int t = target < drop ? target : target - 1;
    f[t] = f[t].multiply_by_ivp(q * dpow);
    return NestedSum(std::move(f));
  };

  if (j == l - 1) {
    // Innermost level: sum_{n_l <= n_{l-1}} P(n_l) = Q1(n_{l-1}).
    reduce_impl(splice(j, j - 1, p.discrete_sum()), lambda / dpow,
                weight_drop + mj, out);
  } else {
    // Middle level: the Q1/Q2 split of the proof.
    reduce_impl(splice(j, j - 1, p.discrete_sum()), lambda / dpow,
                weight_drop + mj, out);
    reduce_impl(splice(j, j + 1, p.discrete_sum_strict()), -lambda / dpow,
                weight_drop + mj, out);
  }
}

}  // namespace

std::vector<ReducedTerm> reduce(const NestedSum& s) {
  if (s.factors.front().index() >= 0)
    throw std::invalid_argument("reduce: I(R_1) must be negative");
  if (auto witness = check_indices_condition(s)) {
    throw std::invalid_argument(
        "reduce: IndicesSum violated at (j1, j2) = (" +
        std::to_string(witness->first) + ", " + std::to_string(witness->second) +
        ")");
  }
  std::vector<ReducedTerm> out;
  reduce_impl(s, Rat(1), 0, out);
  return out;
}

std::vector<std::pair<Rat, ElementarySum>> to_elementary(const NestedSum& s) {
  for (const auto& r : s.factors)
    if (!r.is_proper())
      throw std::invalid_argument("to_elementary: factor with polynomial part");

  std::vector<std::pair<Rat, ElementarySum>> out;
  std::vector<int> u(s.depth()), p(s.depth());
  Rat coef(1);
  // Depth-first cartesian product over each level's partial-fraction terms.
  auto rec = [&](auto&& self, int level, const Rat& c) -> void {
    if (level == s.depth()) {
      out.emplace_back(c, ElementarySum(u, p));
      return;
    }
    for (const auto& [key, a] : s.factors[level].fractions()) {
      p[level] = static_cast<int>(key.first);
      u[level] = key.second;
      self(self, level + 1, c * a);
    }
  };
  rec(rec, 0, coef);
  return out;
}

}  // namespace zetaform
