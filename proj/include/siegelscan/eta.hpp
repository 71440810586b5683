#pragma once

#include <string>
#include <vector>

#include "siegelscan/qexp.hpp"

namespace siegelscan {

// Product prod_d eta(d tau)^{e_d}. The leading q-power sum(d*e)/24 must be a
// non-negative integer for the expansion to live in Z[[q]].
struct EtaQuotientSpec {
  std::vector<std::pair<long, long>> factors;  // (scale d, exponent e)

  // Throws if sum(d*e) is not a non-negative multiple of 24.
  long leading_power() const;

  // Parses "1^24" or "1^2,11^2".
  static EtaQuotientSpec parse(const std::string& text);
  std::string to_string() const;
};

QExpansion eta_quotient(const EtaQuotientSpec& spec, long precision);

struct NewformSpec {
  long weight = 0;
  long level = 0;
  EtaQuotientSpec source;
  std::string label;

  QExpansion expansion(long precision) const;
};

// Fixed catalog of eta-quotient newforms of square-free level, keyed by
// "<weight>.<level>": 12.1, 8.2, 6.3, 4.5, 2.11.
NewformSpec newform_catalog(const std::string& label);
std::vector<std::string> newform_catalog_labels();

}  // namespace siegelscan
