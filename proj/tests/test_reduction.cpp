#include "doctest.h"
#include "zetaform/oracle.hpp"
#include "zetaform/reduction.hpp"

using namespace zetaform;

namespace {

DeltaNormal fraction(long delta, int cap, long alpha, int order, const Rat& a) {
  DeltaNormal r(delta, cap);
  r.add_fraction(alpha, order, a);
  return r;
}

DeltaNormal one(long delta) {
  DeltaNormal r(delta, 1);
  r.add_poly(IntegerValuedPolynomial::constant(Rat(1)));
  return r;
}

/// sum lambda_i * series(F_i) compared against series(S) through z^order.
void check_series_preserved(const NestedSum& s,
                            const std::vector<ReducedTerm>& terms, long order) {
  SeriesWindow direct = nested_sum_series(s, order);
  SeriesWindow combined;
  combined.add_coeff(0, Rat(0));
  for (const ReducedTerm& t : terms)
    combined += nested_sum_series(t.sum, order).scaled(t.lambda);
  auto [equal, mismatch] = series_equal(direct, combined);
  INFO("first mismatch at z^", mismatch);
  CHECK(equal);
}

}  // namespace

TEST_CASE("indices condition witnesses") {
  // R1 = 1 (index 0) violates the prefix condition at j1 = 1.
  NestedSum bad({one(1)});
  auto w = check_indices_condition(bad);
  REQUIRE(w.has_value());
  CHECK(*w == std::make_pair(1, 1));
  CHECK_THROWS_AS(reduce(bad), std::invalid_argument);

  // Proper chain passes.
  NestedSum good({fraction(1, 2, 1, 2, Rat(1)), fraction(1, 1, 0, 1, Rat(1))});
  CHECK_FALSE(check_indices_condition(good).has_value());
}

TEST_CASE("already proper input reduces to itself") {
  NestedSum s({fraction(1, 2, 1, 2, Rat(1)), fraction(1, 1, 2, 1, Rat(1, 2))});
  auto terms = reduce(s);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].lambda == Rat(1));
  CHECK(terms[0].weight_drop == 0);
  CHECK(terms[0].sum.depth() == 2);
}

TEST_CASE("innermost constant level: sum_{n2<=n1} 1 = n1") {
  // S = {1/(x+1)^2, 1}, Delta = 1: value = sum z^{n-1} n/(n+1)^2.
  NestedSum s({fraction(1, 2, 1, 2, Rat(1)), one(1)});
  auto terms = reduce(s);
  for (const ReducedTerm& t : terms) {
    CHECK(t.sum.depth() == 1);
    for (const auto& f : t.sum.factors) CHECK(f.index() < 0);
    CHECK(is_integer(t.lambda * Rat(pow_int(lcm_upto(1), t.weight_drop))));
  }
  check_series_preserved(s, terms, 40);

  // Direct spot check of the value: coefficient of z^{n-1} is n/(n+1)^2.
  SeriesWindow w = nested_sum_series(s, 10);
  for (long n = 1; n <= 11; ++n)
    CHECK(w.coeff(n - 1) == Rat(n) / pow_rat(Rat(n + 1), 2));
}

TEST_CASE("middle polynomial level produces the Q1/Q2 split") {
  // S = {1/(x+1)^3, 1, 1}, Delta = 2; eliminating the middle constant level
  // branches into the two discrete-sum terms. (The leading factor needs
  // index <= -3 so that the prefix-index condition holds across both
  // constant levels.)
  NestedSum s({fraction(2, 3, 1, 3, Rat(1)), one(2), one(2)});
  auto terms = reduce(s);
  CHECK(terms.size() >= 2);
  const Int d2 = lcm_upto(2);
  for (const ReducedTerm& t : terms) {
    for (const auto& f : t.sum.factors) CHECK(f.index() < 0);
    CHECK(is_integer(t.lambda * Rat(pow_int(d2, t.weight_drop))));
  }
  check_series_preserved(s, terms, 40);
}

TEST_CASE("reduction of a deeper mixed chain") {
  // R2 has both a fraction and a polynomial part; both branches exercised.
  DeltaNormal r2 = fraction(2, 1, 0, 1, Rat(1));
  r2.add_poly(IntegerValuedPolynomial::constant(Rat(1)));
  NestedSum s({fraction(2, 2, 2, 2, Rat(1)), r2, fraction(2, 1, 1, 1, Rat(1))});
  auto terms = reduce(s);
  const Int d2 = lcm_upto(2);
  for (const ReducedTerm& t : terms) {
    for (const auto& f : t.sum.factors) {
      CHECK(f.index() < 0);
      CHECK(f.check_contract());
    }
    CHECK(is_integer(t.lambda * Rat(pow_int(d2, t.weight_drop))));
  }
  check_series_preserved(s, terms, 40);
}

TEST_CASE("to_elementary expands proper chains") {
  // {1/(x+1)} -> single elementary sum.
  auto e1 = to_elementary(NestedSum({fraction(1, 1, 1, 1, Rat(1))}));
  REQUIRE(e1.size() == 1);
  CHECK(e1[0].first == Rat(1));
  CHECK(e1[0].second.u == std::vector<int>{1});
  CHECK(e1[0].second.p == std::vector<int>{1});

  // x/(x+1)^2 normalized = 1/(x+1) - 1/(x+1)^2.
  DeltaNormal norm(1, 2);
  norm.add_fraction(1, 1, Rat(1));
  norm.add_fraction(1, 2, Rat(-1));
  auto e2 = to_elementary(NestedSum({norm}));
  REQUIRE(e2.size() == 2);
  CHECK(e2[0].first == Rat(1));
  CHECK(e2[0].second.u == std::vector<int>{1});
  CHECK(e2[1].first == Rat(-1));
  CHECK(e2[1].second.u == std::vector<int>{2});

  // 1/(x(x+2)) split = (1/2)/x - (1/2)/(x+2).
  DeltaNormal split = fraction(2, 1, 0, 1, Rat(1));
  split.multiply_by_simple_pole(2);
  auto e3 = to_elementary(NestedSum({split}));
  REQUIRE(e3.size() == 2);
  CHECK(e3[0].first == Rat(1, 2));
  CHECK(e3[0].second.p == std::vector<int>{0});
  CHECK(e3[1].first == Rat(-1, 2));
  CHECK(e3[1].second.p == std::vector<int>{2});

  // Improper input rejected.
  CHECK_THROWS_AS(to_elementary(NestedSum({one(1)})), std::invalid_argument);
}

TEST_CASE("to_elementary agrees with the series oracle across levels") {
  NestedSum s({fraction(1, 2, 1, 2, Rat(1)), fraction(1, 1, 0, 1, Rat(1))});
  SeriesWindow direct = nested_sum_series(s, 30);
  SeriesWindow combined;
  combined.add_coeff(0, Rat(0));
  for (const auto& [coef, elem] : to_elementary(s))
    combined += elementary_series(elem, 30).scaled(coef);
  auto [equal, mismatch] = series_equal(direct, combined);
  INFO("first mismatch at z^", mismatch);
  CHECK(equal);
}

TEST_CASE("nested series matches the polylog window for 1/x^2, 1/x") {
  // z^{-1} Le_{2,1}(z): coefficient of z^2 is (1/9)(1 + 1/2 + 1/3) = 11/54.
  NestedSum s({fraction(1, 2, 0, 2, Rat(1)), fraction(1, 1, 0, 1, Rat(1))});
  SeriesWindow w = nested_sum_series(s, 4);
  CHECK(w.coeff(0) == Rat(1));
  CHECK(w.coeff(2) == Rat(11, 54));
}
