#include "doctest.h"
#include "zetaform/delta_normal.hpp"

using namespace zetaform;

namespace {

DeltaNormal simple(long delta, int cap, long alpha, int order, const Rat& a) {
  DeltaNormal r(delta, cap);
  r.add_fraction(alpha, order, a);
  return r;
}

}  // namespace

TEST_CASE("taylor shift recovers coefficients around -alpha") {
  // x^2 + 3x + 5 at alpha = 1: t(x) = (x+1)^2 + (x+1) + 3.
  Polynomial p(std::vector<Rat>{Rat(5), Rat(3), Rat(1)});
  auto t = taylor_at(p, Rat(1));
  CHECK(t == std::vector<Rat>{Rat(3), Rat(1), Rat(1)});
  Rat check(0);
  for (size_t k = 0; k < t.size(); ++k) check += t[k] * pow_rat(Rat(4 + 1), k);
  CHECK(check == p.evaluate(Rat(4)));
}

TEST_CASE("index of basic shapes") {
  CHECK(simple(1, 1, 1, 1, Rat(1)).index() == -1);  // 1/(x+1)

  DeltaNormal pure(2, 1);
  pure.add_poly(IntegerValuedPolynomial::from_power_basis(
      Polynomial::monomial(Rat(1), 2)));
  CHECK(pure.index() == 2);  // x^2

  DeltaNormal mixed = simple(1, 1, 1, 1, Rat(1));
  mixed.add_poly(IntegerValuedPolynomial::from_power_basis(
      Polynomial::monomial(Rat(1), 1)));
  CHECK(mixed.index() == 1);  // 1/(x+1) + x = (x^2 + x + 1)/(x+1)

  CHECK(DeltaNormal(1, 1).index() == -1);  // zero function, harmlessly proper
}

TEST_CASE("index sees cancellation in the fraction part") {
  // 1/(x+1) - 1/(x+2) = 1/((x+1)(x+2)): index -2, not -1.
  DeltaNormal r = simple(3, 1, 1, 1, Rat(1));
  r.add_fraction(2, 1, Rat(-1));
  CHECK(r.index() == -2);
}

TEST_CASE("multiply_by_simple_pole redistributes exactly") {
  // (1/x) * 1/(x+2) = (1/2)/x - (1/2)/(x+2).
  DeltaNormal r = simple(2, 1, 0, 1, Rat(1));
  r.multiply_by_simple_pole(2);
  CHECK(r.fractions().at({0, 1}) == Rat(1, 2));
  CHECK(r.fractions().at({2, 1}) == Rat(-1, 2));

  // Poly part: x/(x+1) = -1/(x+1) + 1.
  DeltaNormal q(1, 1);
  q.add_poly(IntegerValuedPolynomial::from_power_basis(
      Polynomial::monomial(Rat(1), 1)));
  q.multiply_by_simple_pole(1);
  CHECK(q.fractions().at({1, 1}) == Rat(-1));
  CHECK(q.poly_part().evaluate(Int(7)) == 1);
}

TEST_CASE("multiply_by_ivp matches the Lemma 2 examples") {
  IntegerValuedPolynomial x = IntegerValuedPolynomial::from_power_basis(
      Polynomial::monomial(Rat(1), 1));

  // Identity multiplication.
  DeltaNormal r = simple(1, 1, 1, 1, Rat(1));
  DeltaNormal same = r.multiply_by_ivp(IntegerValuedPolynomial::constant(Rat(1)));
  CHECK(same == r);

  // 1/(x+1) * x = -1/(x+1) + 1.
  DeltaNormal rx = r.multiply_by_ivp(x);
  CHECK(rx.fractions().at({1, 1}) == Rat(-1));
  CHECK(rx.poly_part().evaluate(Int(5)) == 1);

  // 1/(x+1)^2 * x = -1/(x+1)^2 + 1/(x+1); check by evaluation.
  DeltaNormal r2 = simple(1, 2, 1, 2, Rat(1));
  DeltaNormal r2x = r2.multiply_by_ivp(x);
  for (long n = 1; n <= 8; ++n)
    CHECK(r2x.evaluate(Rat(n)) == Rat(n) / pow_rat(Rat(n + 1), 2));
  CHECK(r2x.check_contract());

  CHECK_THROWS_AS(r.multiply_by_ivp(IntegerValuedPolynomial::from_power_basis(
                      Polynomial::monomial(Rat(1), 2))),
                  std::invalid_argument);
}

TEST_CASE("multiply_by_ivp is exact on a general product") {
  // R = 2/(x+1)^2 - 1/(x+3) + (x choose 2), T = x(x-1)/2 + 3, Delta = 2.
  DeltaNormal r(2, 2);
  r.add_fraction(1, 2, Rat(2));
  r.add_fraction(3, 1, Rat(-1));
  r.add_poly(IntegerValuedPolynomial({Rat(0), Rat(0), Rat(1)}));
  IntegerValuedPolynomial t({Rat(3), Rat(0), Rat(1)});
  DeltaNormal rt = r.multiply_by_ivp(t);
  for (long n = 1; n <= 10; ++n)
    CHECK(rt.evaluate(Rat(n)) == r.evaluate(Rat(n)) * t.evaluate(Int(n)));
  CHECK(rt.pole_cap() == r.pole_cap());
}

TEST_CASE("contract checking flags violations") {
  DeltaNormal ok(2, 2);
  ok.add_fraction(0, 1, Rat(1, 2));  // D_2 = 2, D^{2-1} * 1/2 integral
  CHECK(ok.check_contract());

  DeltaNormal bad(2, 2);
  bad.add_fraction(0, 1, Rat(1, 5));  // 2/5 not integral
  std::string why;
  CHECK_FALSE(bad.check_contract(&why));
  CHECK(!why.empty());
}

TEST_CASE("pole cap management") {
  DeltaNormal r = simple(1, 3, 1, 2, Rat(1));
  CHECK(r.max_pole_order() == 2);
  r.tighten_pole_cap();
  CHECK(r.pole_cap() == 2);
  CHECK_THROWS_AS(r.set_pole_cap(1), std::invalid_argument);
}
