#include "zetaform/rational.hpp"

namespace zetaform {

Int lcm_upto(long n) {
  if (n < 0) throw std::invalid_argument("lcm_upto: negative bound");
  Int l = 1;
  for (long k = 2; k <= n; ++k) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), k);
  return l;
}

std::string rat_to_string(const Rat& r) {
  Rat c(r);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace zetaform
