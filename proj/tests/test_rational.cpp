#include "doctest.h"
#include "zetaform/rational.hpp"

using namespace zetaform;

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(Int(-3), 2) == 6);  // C(-3,2) = 6
}

TEST_CASE("pow helpers") {
  CHECK(pow_int(Int(3), 4) == 81);
  CHECK(pow_rat(Rat(2, 3), 2) == Rat(4, 9));
  CHECK(pow_rat(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(pow_rat(Rat(7), 0) == 1);
  CHECK_THROWS(pow_rat(Rat(0), -1));
}

TEST_CASE("lcm_upto matches known values") {
  CHECK(lcm_upto(0) == 1);
  CHECK(lcm_upto(1) == 1);
  CHECK(lcm_upto(2) == 2);
  CHECK(lcm_upto(6) == 60);
  CHECK(lcm_upto(10) == 2520);  // lcm(1..10)
}

TEST_CASE("rational string round trip") {
  CHECK(rat_to_string(Rat(-22, 4)) == "-11/2");
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_from_string("-11/2") == Rat(-11, 2));
  CHECK(rat_from_string("7") == 7);
  CHECK_THROWS(rat_from_string("1/0"));
  CHECK_THROWS(rat_from_string("abc"));
}
