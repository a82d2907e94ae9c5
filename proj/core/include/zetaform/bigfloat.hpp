#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "zetaform/rational.hpp"

namespace zetaform {

/// Thin RAII wrapper over mpfr_t. Precision is fixed per value; binary
/// operations use the larger precision of the two operands.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  BigFloat(const Rat& r, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_q(x_, r.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(long v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_si(x_, v, MPFR_RNDN);
  }
  BigFloat(double v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_d(x_, v, MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }
  BigFloat& operator=(BigFloat o) {
    mpfr_swap(x_, o.x_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(x_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

  static mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 16);
  }

  BigFloat operator+(const BigFloat& o) const { return bin(o, mpfr_add); }
  BigFloat operator-(const BigFloat& o) const { return bin(o, mpfr_sub); }
  BigFloat operator*(const BigFloat& o) const { return bin(o, mpfr_mul); }
  BigFloat operator/(const BigFloat& o) const { return bin(o, mpfr_div); }
  BigFloat& operator+=(const BigFloat& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(x_, x_, o.x_, MPFR_RNDN); return *this; }
  BigFloat operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.x_, r.x_, MPFR_RNDN);
    return r;
  }

  BigFloat abs() const {
    BigFloat r(*this);
    mpfr_abs(r.x_, r.x_, MPFR_RNDN);
    return r;
  }
  BigFloat log() const { return un(mpfr_log); }
  BigFloat exp() const { return un(mpfr_exp); }
  BigFloat sqrt() const { return un(mpfr_sqrt); }
  BigFloat pow_si(long e) const {
    BigFloat r(precision());
    mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
    return r;
  }

  int compare(const BigFloat& o) const { return mpfr_cmp(x_, o.x_); }
  bool operator<(const BigFloat& o) const { return compare(o) < 0; }
  bool operator<=(const BigFloat& o) const { return compare(o) <= 0; }
  bool operator>(const BigFloat& o) const { return compare(o) > 0; }
  bool is_zero() const { return mpfr_zero_p(x_); }
  bool is_finite() const { return mpfr_number_p(x_); }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

  std::string to_string(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, x_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

 private:
  using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  BigFloat bin(const BigFloat& o, BinOp op) const {
    BigFloat r(std::max(precision(), o.precision()));
    op(r.x_, x_, o.x_, MPFR_RNDN);
    return r;
  }
  BigFloat un(UnOp op) const {
    BigFloat r(precision());
    op(r.x_, x_, MPFR_RNDN);
    return r;
  }
  mpfr_t x_;
};

}  // namespace zetaform
