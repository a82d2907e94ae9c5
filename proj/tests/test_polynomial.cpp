#include "doctest.h"
#include "zetaform/polynomial.hpp"

using namespace zetaform;

TEST_CASE("canonical form and degree") {
  Polynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == Polynomial::kZeroDegree);
  Polynomial p(std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK(p.degree() == 0);
  CHECK(Polynomial::monomial(Rat(3), 2).coeff(2) == 3);
}

TEST_CASE("arithmetic and evaluation") {
  Polynomial p(std::vector<Rat>{Rat(1), Rat(2)});   // 1 + 2x
  Polynomial q(std::vector<Rat>{Rat(-1), Rat(1)});  // -1 + x
  CHECK((p * q).evaluate(Rat(3)) == p.evaluate(Rat(3)) * q.evaluate(Rat(3)));
  CHECK((p + q).coeff(1) == 3);
  CHECK((p - p).is_zero());
  CHECK((p * Rat(1, 2)).coeff(0) == Rat(1, 2));
  CHECK(p.shifted_up(2).degree() == 3);
  CHECK(p.shifted_up(2).coeff(2) == 1);
}

TEST_CASE("height and denominator clearance") {
  Polynomial p(std::vector<Rat>{Rat(1, 6), Rat(-5, 2), Rat(3)});
  CHECK(p.height() == Rat(3));
  CHECK(p.clears_denominator(Int(6), 1));
  CHECK_FALSE(p.clears_denominator(Int(2), 1));
  CHECK_FALSE(p.clears_denominator(Int(2), 2));  // 4/6 is still not integral
  Polynomial q(std::vector<Rat>{Rat(1, 4)});
  CHECK_FALSE(q.clears_denominator(Int(2), 1));
  CHECK(q.clears_denominator(Int(2), 2));
}

TEST_CASE("divide_by_linear performs exact division") {
  // (x + 2)(3x - 1/2) = 3x^2 + 11/2 x - 1
  Polynomial prod(std::vector<Rat>{Rat(-1), Rat(11, 2), Rat(3)});
  Polynomial q = prod.divide_by_linear(Rat(2));
  CHECK(q == Polynomial(std::vector<Rat>{Rat(-1, 2), Rat(3)}));
  Polynomial bad(std::vector<Rat>{Rat(1), Rat(1)});
  CHECK_THROWS(bad.divide_by_linear(Rat(2)));
}
