#include "siegelscan/rational.hpp"

#include <stdexcept>

namespace siegelscan {

Rational rational_from_string(const std::string& s) {
  Rational v;
  if (v.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  v.canonicalize();
  return v;
}

Integer integer_pow(const Integer& d, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), d.get_mpz_t(), e);
  return out;
}

}  // namespace siegelscan
