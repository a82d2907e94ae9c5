#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetaform {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

inline Int binomial(const Int& n, long k) {
  if (k < 0) return 0;
  Int b;
  mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return b;
}

inline Int pow_int(const Int& base, long e) {
  if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) throw std::domain_error("pow_rat: 0 to negative power");
    Rat inv = 1 / base;
    return pow_rat(inv, -e);
  }
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

/// lcm(1, 2, ..., N); the universal denominator scale. lcm_upto(0) == lcm_upto(1) == 1.
Int lcm_upto(long n);

/// "num/den", with "/den" omitted when the denominator is 1.
std::string rat_to_string(const Rat& r);

/// Parses the serialization produced by rat_to_string.
Rat rat_from_string(const std::string& s);

}  // namespace zetaform
