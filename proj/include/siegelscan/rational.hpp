#pragma once

#include <gmpxx.h>

#include <string>

namespace siegelscan {

using Integer = mpz_class;
using Rational = mpq_class;

// Renders "num/den" with an explicit denominator, also when den == 1.
inline std::string rational_to_string(const Rational& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational rational_from_string(const std::string& s);

// Exact d^e for e >= 0.
Integer integer_pow(const Integer& d, unsigned long e);

}  // namespace siegelscan
