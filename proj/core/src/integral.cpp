#include "zetaform/integral.hpp"

#include <map>
#include <stdexcept>

#include "zetaform/elementary.hpp"

namespace zetaform {

long IntegralParams::q(int j) const {
  long s = 0;
  for (int i = group_begin(j); i < group_ends[j]; ++i) s += b[i] - a[i];
  return s;
}

long IntegralParams::big_p() const {
  long v = 0;
  for (int i = 0; i < m; ++i) v = std::max(v, b[i] - 2);
  return v;
}

long IntegralParams::p_min(int j) const {
  long v = a[group_begin(j)] - 1;
  for (int i = group_begin(j); i < group_ends[j]; ++i) v = std::min(v, a[i] - 1);
  return v;
}

long IntegralParams::p_max(int j) const {
  long v = b[group_begin(j)] - 2;
  for (int i = group_begin(j); i < group_ends[j]; ++i) v = std::max(v, b[i] - 2);
  return v;
}

void IntegralParams::check_well_formed() const {
  if (m < 1 || group_ends.empty() || group_ends.back() != m)
    throw std::invalid_argument("IntegralParams: bad group structure");
  for (size_t j = 1; j < group_ends.size(); ++j)
    if (group_ends[j] <= group_ends[j - 1])
      throw std::invalid_argument("IntegralParams: group ends not increasing");
  if (group_ends.front() < 1)
    throw std::invalid_argument("IntegralParams: empty first group");
  if (static_cast<int>(a.size()) != m || static_cast<int>(b.size()) != m ||
      static_cast<int>(c.size()) != levels())
    throw std::invalid_argument("IntegralParams: size mismatch");
  for (int i = 0; i < m; ++i)
    if (a[i] < 1 || b[i] <= a[i])
      throw std::invalid_argument("IntegralParams: need b_i > a_i >= 1");
  for (long cj : c)
    if (cj < 0) throw std::invalid_argument("IntegralParams: negative c_j");
}

ValidationReport validate_lemma4(const IntegralParams& p, long delta) {
  ValidationReport rep;
  p.check_well_formed();
  const int l = p.levels();
  for (int j = 0; j < l; ++j)
    if (p.c[j] > delta + 1)
      rep.fail("c_" + std::to_string(j + 1) + " > Delta + 1");
  long cs = 0, qs = 0;
  for (int j = 0; j < l; ++j) {
    cs += p.c[j];
    qs += p.q(j);
    if (cs > qs)
      rep.fail("prefix condition c_1+..+c_j <= q_1+..+q_j fails at j = " +
               std::to_string(j + 1));
  }
  for (int j1 = 2; j1 <= l; ++j1) {
    long acc = p.c[j1 - 2];  // c_{j1-1}, 1-based
    for (int j2 = j1; j2 <= l; ++j2) {
      acc += p.c[j2 - 1] - p.q(j2 - 1);
      if (acc > delta + 1)
        rep.fail("window condition fails at (j1, j2) = (" + std::to_string(j1) +
                 ", " + std::to_string(j2) + ")");
    }
  }
  return rep;
}

long theorem1_delta(const IntegralParams& p, const ShiftVector& d) {
  long delta = 0;
  long suffix = 0;
  for (long dj : d.d) suffix += dj;
  for (int j = 0; j < p.levels(); ++j) {
    for (int i = p.group_begin(j); i < p.group_ends[j]; ++i)
      delta = std::max(delta, p.b[i] - suffix - 2);
    suffix -= d.d[j];
  }
  return delta;
}

ValidationReport validate_theorem1(const IntegralParams& p, const ShiftVector& d) {
  ValidationReport rep;
  p.check_well_formed();
  const int l = p.levels();
  if (static_cast<int>(d.d.size()) != l) {
    rep.fail("shift vector length mismatch");
    return rep;
  }
  long suffix = 0;
  for (long dj : d.d) {
    if (dj < 0) rep.fail("negative shift entry");
    suffix += dj;
  }
  for (int j = 0; j < l; ++j) {
    if (d.d[j] > p.c[j]) rep.fail("d_j > c_j at j = " + std::to_string(j + 1));
    for (int i = p.group_begin(j); i < p.group_ends[j]; ++i)
      if (suffix >= p.a[i])
        rep.fail("suffix shift >= a_i in group " + std::to_string(j + 1));
    suffix -= d.d[j];
  }
  if (!rep.ok) return rep;
  ValidationReport inner = validate_lemma4(p, theorem1_delta(p, d));
  for (auto& f : inner.failures) rep.fail(std::move(f));
  return rep;
}

std::pair<Rat, IntegralParams> collapse_zero_c(const IntegralParams& p) {
  Rat scalar(1);
  IntegralParams cur = p;
  for (;;) {
    int j = -1;
    for (int k = 0; k < cur.levels(); ++k)
      if (cur.c[k] == 0) {
        j = k;
        break;
      }
    if (j < 0) break;
    if (j == cur.levels() - 1) {
      // Trailing group: its variables decouple into Beta integrals.
      for (int i = cur.group_begin(j); i < cur.group_ends[j]; ++i)
        scalar *= Rat(factorial(cur.a[i] - 1) * factorial(cur.b[i] - cur.a[i] - 1)) /
                  Rat(factorial(cur.b[i] - 1));
      cur.a.erase(cur.a.begin() + cur.group_begin(j), cur.a.end());
      cur.b.erase(cur.b.begin() + cur.group_begin(j), cur.b.end());
      cur.m = static_cast<int>(cur.a.size());
      cur.group_ends.pop_back();
      cur.c.pop_back();
      if (cur.group_ends.empty()) break;
    } else {
      // Inner group: its variables only appear in later prefix products;
      // merge into the following group.
      cur.group_ends.erase(cur.group_ends.begin() + j);
      cur.c.erase(cur.c.begin() + j);
    }
  }
  return {scalar, cur};
}

namespace {

/// (x+lo)(x+lo+1)...(x+hi) / scale as an integer-valued polynomial.
IntegerValuedPolynomial rising_factor(long lo, long hi, const Int& scale) {
  Polynomial prod(Rat(1));
  for (long t = lo; t <= hi; ++t)
    prod = prod * Polynomial(std::vector<Rat>{Rat(t), Rat(1)});
  prod = prod * (1 / Rat(scale));
  return IntegerValuedPolynomial::from_power_basis(prod);
}

/// The group factor prod_i Gamma(b_i-a_i) / ((x+a_i-1)...(x+b_i-2)) in
/// partial-fraction form.
DeltaNormal group_fraction(const IntegralParams& p, int j, long delta) {
  Rat scalar(1);
  std::vector<long> poles;
  for (int i = p.group_begin(j); i < p.group_ends[j]; ++i) {
    scalar *= Rat(factorial(p.b[i] - p.a[i] - 1));
    for (long t = p.a[i] - 1; t <= p.b[i] - 2; ++t) poles.push_back(t);
  }
  DeltaNormal g(delta, 1);
  g.add_fraction(poles[0], 1, scalar);
  for (size_t t = 1; t < poles.size(); ++t) g.multiply_by_simple_pole(poles[t]);
  g.tighten_pole_cap();
  return g;
}

}  // namespace

std::vector<std::pair<int, NestedSum>> sum_representation(const IntegralParams& p,
                                                          long delta) {
  p.check_well_formed();
  const int l = p.levels();
  for (long cj : p.c)
    if (cj < 1)
      throw std::invalid_argument("sum_representation: c_j = 0 (collapse first)");

  // table[j][k_j][k_{j-1}] = G_j * p_j^1(k_j) * p_{j-1}^2(k_{j-1}); k_0 = 0.
  std::vector<std::vector<std::vector<DeltaNormal>>> table(l);
  for (int j = 0; j < l; ++j) {
    const long cj = p.c[j];
    const long c_prev = (j == 0) ? 1 : p.c[j - 1];
    DeltaNormal base = group_fraction(p, j, delta);
    table[j].reserve(cj);
    for (long kj = 0; kj < cj; ++kj) {
      DeltaNormal with_p1 =
          base.multiply_by_ivp(rising_factor(kj + 1, cj - 1, factorial(cj - 1 - kj)));
      std::vector<DeltaNormal> row;
      row.reserve(c_prev);
      for (long kp = 0; kp < c_prev; ++kp)
        row.push_back(with_p1.multiply_by_ivp(rising_factor(0, kp - 1, factorial(kp))));
      table[j].push_back(std::move(row));
    }
  }

  std::vector<std::pair<int, NestedSum>> out;
  std::vector<long> k(l, 0);
  for (;;) {
    int sign = 1;
    std::vector<DeltaNormal> factors;
    factors.reserve(l);
    for (int j = 0; j < l; ++j) {
      if (k[j] % 2) sign = -sign;
      factors.push_back(table[j][k[j]][j == 0 ? 0 : k[j - 1]]);
    }
    out.emplace_back(sign, NestedSum(std::move(factors)));
    int j = l - 1;
    while (j >= 0 && ++k[j] == p.c[j]) k[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

std::pair<long, std::vector<ShiftedTerm>> apply_shift(const IntegralParams& p,
                                                      const ShiftVector& d) {
  const int l = p.levels();
  long total_d = 0;
  for (long dj : d.d) total_d += dj;

  // Shifted exponent profile shared by every term.
  IntegralParams shifted = p;
  long suffix = total_d;
  for (int j = 0; j < l; ++j) {
    for (int i = p.group_begin(j); i < p.group_ends[j]; ++i) {
      shifted.a[i] = p.a[i] - suffix;
      shifted.b[i] = p.b[i] - suffix;
    }
    suffix -= d.d[j];
  }

  std::vector<ShiftedTerm> terms;
  std::vector<long> e(l, 0);
  for (;;) {
    Rat coef(1);
    IntegralParams t = shifted;
    for (int j = 0; j < l; ++j) {
      coef *= Rat(binomial(d.d[j], e[j]));
      if (e[j] % 2) coef = -coef;
      t.c[j] = p.c[j] - e[j];
    }
    terms.push_back({coef, std::move(t)});
    int j = l - 1;
    while (j >= 0 && ++e[j] > d.d[j]) e[j--] = 0;
    if (j < 0) break;
  }
  return {total_d, std::move(terms)};
}

LinearForm decompose_integral(const IntegralParams& p, const ShiftVector& d) {
  ValidationReport rep = validate_theorem1(p, d);
  if (!rep.ok) {
    std::string msg = "decompose_integral: validation failed:";
    for (const auto& f : rep.failures) msg += " [" + f + "]";
    throw std::invalid_argument(msg);
  }
  const long delta = theorem1_delta(p, d);
  auto [w_power, shifted_terms] = apply_shift(p, d);

  std::map<ElementarySum, Rat> aggregate;
  Rat free_const(0);
  for (const ShiftedTerm& term : shifted_terms) {
    auto [scalar, cp] = collapse_zero_c(term.params);
    const Rat outer = term.coef * scalar;
    if (outer == 0) continue;
    if (cp.levels() == 0) {
      free_const += outer;
      continue;
    }
    for (auto& [sign, nested] : sum_representation(cp, delta)) {
      for (const ReducedTerm& rt : reduce(nested)) {
        for (const auto& [cf, elem] : to_elementary(rt.sum)) {
          Rat total = outer * Rat(sign) * rt.lambda * cf;
          if (total != 0) aggregate[elem] += total;
        }
      }
    }
  }

  LinearForm form;
  DecomposeMemo memo;
  for (const auto& [elem, coef] : aggregate)
    if (coef != 0) form += decompose(elem, memo).scaled(coef);
  if (w_power > 0)
    form = form.scaled(Polynomial::monomial(Rat(1), static_cast<int>(w_power)));
  if (free_const != 0)
    form.add_free(Polynomial::monomial(free_const, static_cast<int>(w_power)));
  return form;
}

std::pair<IntegralParams, ShiftVector> vasilyev_params(int l, long n) {
  if (l < 1 || n < 0) throw std::invalid_argument("vasilyev_params: bad l or n");
  IntegralParams p;
  p.m = 2 * l + 1;
  for (int j = 1; j <= l; ++j) p.group_ends.push_back(2 * j);
  p.group_ends.push_back(2 * l + 1);
  p.a.assign(p.m, n + 1);
  p.b.assign(p.m, 2 * n + 2);
  p.c.assign(l + 1, n + 1);
  ShiftVector d;
  d.d.assign(l + 1, 0);
  d.d.back() = n;
  return {p, d};
}

namespace {

// Classifies s as <2>_k,1 (returns (false, k)) or 1,<2>_k,1 (returns
// (true, k)); nullopt otherwise.
std::optional<std::pair<bool, int>> classify_vasilyev_index(const MultiIndex& s) {
  if (auto k = special_value_form(s)) return std::make_pair(false, *k);
  if (s.depth() >= 2 && s.entries[0] == 1) {
    MultiIndex tail(std::vector<int>(s.entries.begin() + 1, s.entries.end()));
    if (auto k = special_value_form(tail)) return std::make_pair(true, *k);
  }
  return std::nullopt;
}

}  // namespace

StructureReport vasilyev_structure_check(const LinearForm& form, int l, long n) {
  StructureReport rep;
  const int m = 2 * l + 1;
  const Int dn = lcm_upto(n);
  for (const auto& [s, poly] : form.terms()) {
    auto cls = classify_vasilyev_index(s);
    if (!cls || (!cls->first && cls->second > l) ||
        (cls->first && cls->second > l - 1)) {
      rep.indices_ok = false;
      rep.notes.push_back("unexpected index " + s.to_string());
      continue;
    }
    // Divergent-at-1 indices must vanish at w = 1: P_0 and every T_k.
    const bool divergent = cls->first || cls->second == 0;
    if (divergent && poly.evaluate(Rat(1)) != 0) {
      rep.vanishing_ok = false;
      rep.notes.push_back("nonzero value at w = 1 for " + s.to_string());
    }
    if (!poly.clears_denominator(dn, m)) rep.coarse_denominator_ok = false;
    if (!poly.clears_denominator(dn, m - s.weight()))
      rep.sharp_denominator_ok = false;
  }
  if (!form.free_term().clears_denominator(dn, m)) {
    rep.coarse_denominator_ok = false;
    rep.sharp_denominator_ok = false;
  }
  return rep;
}

VasilyevValue vasilyev_value(const LinearForm& form, int l, long n,
                             const PrecisionContext& ctx) {
  StructureReport rep = vasilyev_structure_check(form, l, n);
  if (!rep.pass())
    throw std::runtime_error("vasilyev_value: structure check failed");
  VasilyevValue v;
  const mpfr_prec_t prec = ctx.work_bits();
  v.numeric = BigFloat(0L, prec);
  for (int k = 1; k <= l; ++k) {
    std::vector<int> idx(k, 2);
    idx.push_back(1);
    Rat coeff = form.coefficient(MultiIndex(idx)).evaluate(Rat(1)) * 2;
    v.zeta_coeff.push_back(coeff);
    if (coeff != 0)
      v.numeric += BigFloat(coeff, prec) * zeta_numeric(2 * k + 1, ctx);
  }
  v.constant = form.free_term().evaluate(Rat(1));
  v.numeric += BigFloat(v.constant, prec);
  return v;
}

VasilyevValue vasilyev_value(int l, long n, const PrecisionContext& ctx) {
  auto [p, d] = vasilyev_params(l, n);
  return vasilyev_value(decompose_integral(p, d), l, n, ctx);
}

}  // namespace zetaform
