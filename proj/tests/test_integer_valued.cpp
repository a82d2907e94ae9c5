#include "doctest.h"
#include "zetaform/integer_valued.hpp"

using namespace zetaform;

TEST_CASE("power basis round trip") {
  // P(x) = x^2: binomial coefficients are (0, 1, 2).
  Polynomial p(std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
  auto ivp = IntegerValuedPolynomial::from_power_basis(p);
  CHECK(ivp.binomial_coeffs() == std::vector<Rat>{Rat(0), Rat(1), Rat(2)});
  CHECK(ivp.to_power_basis() == p);
  CHECK(ivp.is_integer_valued());
  for (long x = -4; x <= 4; ++x) CHECK(ivp.evaluate(Int(x)) == Rat(x * x));
}

TEST_CASE("x^2/2 is not integer valued") {
  Polynomial p(std::vector<Rat>{Rat(0), Rat(0), Rat(1, 2)});
  auto ivp = IntegerValuedPolynomial::from_power_basis(p);
  CHECK_FALSE(ivp.is_integer_valued());
  // But x(x+1)/2 is.
  Polynomial tri(std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1, 2)});
  CHECK(IntegerValuedPolynomial::from_power_basis(tri).is_integer_valued());
}

TEST_CASE("discrete sums satisfy their defining identities") {
  // P(x) = x^2 + 3.
  Polynomial p(std::vector<Rat>{Rat(3), Rat(0), Rat(1)});
  auto ivp = IntegerValuedPolynomial::from_power_basis(p);
  auto q1 = ivp.discrete_sum();
  auto q2 = ivp.discrete_sum_strict();
  for (long n = 1; n <= 8; ++n) {
    Rat direct(0);
    for (long k = 1; k <= n; ++k) direct += Rat(k * k + 3);
    CHECK(q1.evaluate(Int(n)) == direct);
    CHECK(q2.evaluate(Int(n)) == direct - Rat(n * n + 3));
  }
  CHECK(q2.evaluate(Int(1)) == 0);
  CHECK(q1.is_integer_valued());
  CHECK(q2.is_integer_valued());
}

TEST_CASE("divide_linear splits off the pole value") {
  // T(x) = x^2 + 1, alpha = 3, delta = 4.
  Polynomial t(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
  auto ivp = IntegerValuedPolynomial::from_power_basis(t);
  auto [residue, quotient] = ivp.divide_linear(3, 4);
  CHECK(residue == Rat(10));  // T(-3)
  // T(x)/(x+3) = 10/(x+3) + Q(x) as rational functions.
  for (long x = 0; x <= 6; ++x) {
    Rat lhs = Rat(x * x + 1) / Rat(x + 3);
    Rat rhs = Rat(10) / Rat(x + 3) + quotient.evaluate(Rat(x));
    CHECK(lhs == rhs);
  }
  CHECK(quotient.degree() <= 3);
}
