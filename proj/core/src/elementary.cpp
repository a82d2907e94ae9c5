#include "zetaform/elementary.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zetaform/oracle.hpp"

namespace zetaform {

ElementarySum::ElementarySum(std::vector<int> exps, std::vector<int> shifts)
    : u(std::move(exps)), p(std::move(shifts)) {
  if (u.empty() || u.size() != p.size())
    throw std::invalid_argument("ElementarySum: mismatched or empty u/p");
  for (int e : u)
    if (e < 1) throw std::invalid_argument("ElementarySum: exponents must be >= 1");
  for (int s : p)
    if (s < 0) throw std::invalid_argument("ElementarySum: shifts must be >= 0");
}

int ElementarySum::weight() const { return std::accumulate(u.begin(), u.end(), 0); }

int ElementarySum::max_shift() const { return *std::max_element(p.begin(), p.end()); }

std::string ElementarySum::to_string() const {
  std::string s = "E(u=";
  for (size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i]);
  s += "; p=";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::pair<std::vector<Rat>, std::vector<Rat>> partial_fraction_pair(int u1, int u2,
                                                                    int p1, int p2) {
  if (p1 == p2)
    throw std::invalid_argument("partial_fraction_pair: equal shifts (merge instead)");
  std::vector<Rat> a(u1), b(u2);
  const Rat d21(p2 - p1), d12(p1 - p2);
  for (int k = 1; k <= u1; ++k) {
    Rat v = Rat(binomial(u1 + u2 - k - 1, u1 - k)) / pow_rat(d21, u1 + u2 - k);
    if ((u1 - k) % 2) v = -v;
    a[k - 1] = v;
  }
  for (int k = 1; k <= u2; ++k) {
    Rat v = Rat(binomial(u1 + u2 - k - 1, u2 - k)) / pow_rat(d12, u1 + u2 - k);
    if ((u2 - k) % 2) v = -v;
    b[k - 1] = v;
  }
  return {std::move(a), std::move(b)};
}

Rat height_bound(const ElementarySum& e) {
  const int l = e.depth();
  const int m = e.weight();
  const int big_p = e.max_shift();
  Rat bound = Rat(factorial(l)) *
              Rat(pow_int(Int(m) * pow_int(Int(2), m), l - 1)) *
              Rat(pow_int(Int(big_p), l));
  return std::max(bound, Rat(1));
}

namespace {

// One slot of a sum under construction: either a plain (u, p) factor or the
// merged pair 1/((n+pa)^{ua} (n+pb)^{ub}) awaiting merge/partial-fraction split.
struct Slot {
  int u = 0, p = 0;
};

// Expands a sum whose slot `pos` holds the double factor (ua,pa)x(ub,pb) into
// elementary sums, decomposes each, and accumulates scaled results.
void expand_double_slot(const std::vector<Slot>& slots, size_t pos, int ua, int pa,
                        int ub, int pb, const Rat& scale, LinearForm& out,
                        DecomposeMemo& memo);

LinearForm decompose_impl(const ElementarySum& e, DecomposeMemo& memo) {
  if (auto it = memo.find(e); it != memo.end()) return it->second;
  const int l = e.depth();

  // Base case: all shifts zero.
  if (e.max_shift() == 0) {
    LinearForm form;
    form.add_term(MultiIndex(e.u), Polynomial::monomial(Rat(1), 1));
    memo.emplace(e, form);
    return form;
  }

  // Largest h > 1 with p_h > 0, if any.
  int h = 0;
  for (int j = l - 1; j >= 1; --j)
    if (e.p[j] > 0) {
      h = j;  // zero-based position (so this is the second level or deeper)
      break;
    }

  LinearForm form;
  if (h >= 1) {
    // Reduce p_h by one.
    ElementarySum main = e;
    --main.p[h];
    form += decompose_impl(main, memo);

    // Plus: length l-1 sum with the (h-1, h) factors sharing one variable.
    {
      std::vector<Slot> slots;
      for (int j = 0; j < l; ++j)
        if (j != h) slots.push_back({e.u[j], e.p[j]});
      expand_double_slot(slots, h - 1, e.u[h - 1], e.p[h - 1], e.u[h], e.p[h],
                         Rat(1), form, memo);
    }

    // Minus: length l-1 sum with shift p_h - 1 at position h.
    if (h == l - 1) {
      std::vector<int> u2(e.u.begin(), e.u.end() - 1);
      std::vector<int> p2(e.p.begin(), e.p.end() - 1);
      Rat c = -1 / Rat(pow_int(Int(e.p[h]), e.u[h]));
      form += decompose_impl(ElementarySum(std::move(u2), std::move(p2)), memo)
                  .scaled(c);
    } else {
      std::vector<Slot> slots;
      for (int j = 0; j < l; ++j)
        if (j != h + 1) slots.push_back({e.u[j], e.p[j]});
      expand_double_slot(slots, h, e.u[h], e.p[h] - 1, e.u[h + 1], e.p[h + 1],
                         Rat(-1), form, memo);
    }
  } else {
    // p_1 > 0, all later shifts zero: multiply through by w = z^{-1}.
    const Polynomial w = Polynomial::monomial(Rat(1), 1);
    ElementarySum main = e;
    --main.p[0];
    form += decompose_impl(main, memo).scaled(w);

    if (l == 1) {
      form.add_free(w * (-1 / Rat(pow_int(Int(e.p[0]), e.u[0]))));
    } else {
      std::vector<Slot> slots;
      for (int j = 0; j < l; ++j)
        if (j != 1) slots.push_back({e.u[j], 0});
      slots[0].p = 0;  // placeholder; slot 0 is replaced by the double factor
      LinearForm inner;
      expand_double_slot(slots, 0, e.u[0], e.p[0] - 1, e.u[1], 0, Rat(-1), inner,
                         memo);
      form += inner.scaled(w);
    }
  }
  memo.emplace(e, form);
  return form;
}

void expand_double_slot(const std::vector<Slot>& slots, size_t pos, int ua, int pa,
                        int ub, int pb, const Rat& scale, LinearForm& out,
                        DecomposeMemo& memo) {
  auto build = [&](int u_here, int p_here) {
    std::vector<int> u, p;
    for (size_t j = 0; j < slots.size(); ++j) {
      if (j == pos) {
        u.push_back(u_here);
        p.push_back(p_here);
      } else {
        u.push_back(slots[j].u);
        p.push_back(slots[j].p);
      }
    }
    return ElementarySum(std::move(u), std::move(p));
  };

  if (pa == pb) {
    out += decompose_impl(build(ua + ub, pa), memo).scaled(scale);
    return;
  }
  auto [a, b] = partial_fraction_pair(ua, ub, pa, pb);
  for (int k = 1; k <= ua; ++k)
    if (a[k - 1] != 0)
      out += decompose_impl(build(k, pa), memo).scaled(scale * a[k - 1]);
  for (int k = 1; k <= ub; ++k)
    if (b[k - 1] != 0)
      out += decompose_impl(build(k, pb), memo).scaled(scale * b[k - 1]);
}

}  // namespace

LinearForm decompose(const ElementarySum& e, DecomposeMemo& memo) {
  return decompose_impl(e, memo);
}

LinearForm decompose(const ElementarySum& e) {
  DecomposeMemo memo;
  return decompose_impl(e, memo);
}

Lemma1Report verify_lemma1(const ElementarySum& e, const LinearForm& form,
                           long order) {
  Lemma1Report report;
  const int m = e.weight();
  const Int d = lcm_upto(e.max_shift());
  for (const auto& [s, poly] : form.terms()) {
    if (!poly.clears_denominator(d, m - s.weight())) report.denominators_ok = false;
    if (poly.height() > height_bound(e)) report.height_ok = false;
  }
  if (!form.free_term().clears_denominator(d, m)) report.denominators_ok = false;
  if (form.free_term().height() > height_bound(e)) report.height_ok = false;

  SeriesWindow direct = elementary_series(e, order);
  SeriesWindow expanded = linear_form_series(form, order);
  auto [equal, mismatch] = series_equal(direct, expanded);
  report.series_ok = equal;
  report.first_series_mismatch = mismatch;
  return report;
}

Lemma1Report verify_lemma1(const ElementarySum& e, long order) {
  return verify_lemma1(e, decompose(e), order);
}

}  // namespace zetaform
