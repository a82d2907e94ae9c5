#include "doctest.h"
#include "zetaform/polylog.hpp"

using namespace zetaform;

namespace {

BigFloat from_decimal(const char* s, mpfr_prec_t prec) {
  BigFloat v(0L, prec);
  mpfr_set_str(v.raw(), s, 10, MPFR_RNDN);
  return v;
}

// Reference values frozen from an independent arbitrary-precision oracle.
const char* kZeta3 = "1.20205690315959428539973816151144999076498629234";
const char* kZeta5 = "1.03692775514336992633136548645703416805708091950";
const char* kLe21Half = "0.63196619783816790666244823201527531815667137166";

}  // namespace

TEST_CASE("le_series exact low-order coefficients") {
  // Le_{2,1}: z + (1/4)(1 + 1/2) z^2 + ...; z^3 coefficient is 11/54.
  auto c = le_series(MultiIndex({2, 1}), 5);
  CHECK(c[0] == Rat(1));
  CHECK(c[1] == Rat(3, 8));
  CHECK(c[2] == Rat(11, 54));
  // Depth 1 is the ordinary polylog: coefficient of z^n is n^{-s}.
  auto d = le_series(MultiIndex({3}), 4);
  CHECK(d[3] == Rat(1, 64));
}

TEST_CASE("special_value_form recognizes (<2>_k, 1)") {
  CHECK(special_value_form(MultiIndex({1})) == 0);
  CHECK(special_value_form(MultiIndex({2, 1})) == 1);
  CHECK(special_value_form(MultiIndex({2, 2, 1})) == 2);
  CHECK_FALSE(special_value_form(MultiIndex({2, 2})).has_value());
  CHECK_FALSE(special_value_form(MultiIndex({3, 1})).has_value());
}

TEST_CASE("zeta_numeric matches frozen references") {
  PrecisionContext ctx;
  ctx.digits = 45;
  const mpfr_prec_t prec = ctx.work_bits();
  BigFloat tol = BigFloat(1L, prec) / BigFloat(10L, prec).pow_si(43);
  CHECK((zeta_numeric(3, ctx) - from_decimal(kZeta3, prec)).abs() < tol);
  CHECK((zeta_numeric(5, ctx) - from_decimal(kZeta5, prec)).abs() < tol);
}

TEST_CASE("le_numeric inside the disc") {
  PrecisionContext ctx;
  ctx.digits = 40;
  const mpfr_prec_t prec = ctx.work_bits();
  BigFloat tol = BigFloat(1L, prec) / BigFloat(10L, prec).pow_si(38);
  BigFloat v = le_numeric(MultiIndex({2, 1}), Rat(1, 2), ctx);
  CHECK((v - from_decimal(kLe21Half, prec)).abs() < tol);
}

TEST_CASE("le_numeric at z = 1 equals the zeta combination") {
  PrecisionContext ctx;
  ctx.digits = 30;
  const mpfr_prec_t prec = ctx.work_bits();
  BigFloat tol = BigFloat(1L, prec) / BigFloat(10L, prec).pow_si(26);
  // Le_{2,1}(1) = 2 zeta(3).
  BigFloat v = le_numeric(MultiIndex({2, 1}), Rat(1), ctx);
  BigFloat ref = BigFloat(2L, prec) * from_decimal(kZeta3, prec);
  CHECK((v - ref).abs() < tol);
  CHECK_THROWS(le_numeric(MultiIndex({1, 1}), Rat(1), ctx));
}
