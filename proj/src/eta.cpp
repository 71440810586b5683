#include "siegelscan/eta.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace siegelscan {

namespace {

struct SparseTerm {
  long exponent;
  long value;  // small: +-1 (pentagonal) or +-(2j+1) (eta^3)
};

// q-free part of eta(tau): prod (1 - q^n) = sum_j (-1)^j q^{j(3j-1)/2}.
std::vector<SparseTerm> euler_series(long scale, long precision) {
  std::vector<SparseTerm> terms;
  terms.push_back({0, 1});
  for (long j = 1;; ++j) {
    long e1 = scale * (j * (3 * j - 1) / 2);
    long e2 = scale * (j * (3 * j + 1) / 2);
    long sign = (j % 2 == 0) ? 1 : -1;
    if (e1 > precision && e2 > precision) break;
    if (e1 <= precision) terms.push_back({e1, sign});
    if (e2 <= precision) terms.push_back({e2, sign});
  }
  return terms;
}

// q-free part of eta(tau)^3: sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}.
std::vector<SparseTerm> euler_cube_series(long scale, long precision) {
  std::vector<SparseTerm> terms;
  for (long j = 0;; ++j) {
    long e = scale * (j * (j + 1) / 2);
    if (e > precision) break;
    terms.push_back({e, (j % 2 == 0) ? (2 * j + 1) : -(2 * j + 1)});
  }
  return terms;
}

void multiply_sparse(std::vector<mpz_class>& c, const std::vector<SparseTerm>& s) {
  long prec = static_cast<long>(c.size()) - 1;
  // s[0] has exponent 0 and value 1; top-down keeps the product in place.
  for (long n = prec; n >= 1; --n) {
    mpz_ptr acc = c[n].get_mpz_t();
    for (size_t i = 1; i < s.size(); ++i) {
      long t = s[i].exponent;
      if (t > n) break;
      long v = s[i].value;
      if (v == 1) {
        mpz_add(acc, acc, c[n - t].get_mpz_t());
      } else if (v == -1) {
        mpz_sub(acc, acc, c[n - t].get_mpz_t());
      } else if (v > 0) {
        mpz_addmul_ui(acc, c[n - t].get_mpz_t(), static_cast<unsigned long>(v));
      } else {
        mpz_submul_ui(acc, c[n - t].get_mpz_t(), static_cast<unsigned long>(-v));
      }
    }
  }
}

void divide_sparse(std::vector<mpz_class>& c, const std::vector<SparseTerm>& s) {
  long prec = static_cast<long>(c.size()) - 1;
  for (long n = 1; n <= prec; ++n) {
    mpz_ptr acc = c[n].get_mpz_t();
    for (size_t i = 1; i < s.size(); ++i) {
      long t = s[i].exponent;
      if (t > n) break;
      long v = s[i].value;
      if (v == 1) {
        mpz_sub(acc, acc, c[n - t].get_mpz_t());
      } else if (v == -1) {
        mpz_add(acc, acc, c[n - t].get_mpz_t());
      } else if (v > 0) {
        mpz_submul_ui(acc, c[n - t].get_mpz_t(), static_cast<unsigned long>(v));
      } else {
        mpz_addmul_ui(acc, c[n - t].get_mpz_t(), static_cast<unsigned long>(-v));
      }
    }
  }
}

}  // namespace

long EtaQuotientSpec::leading_power() const {
  long total = 0;
  for (const auto& [d, e] : factors) {
    if (d <= 0) throw std::invalid_argument("eta factor scale must be positive");
    total += d * e;
  }
  if (total < 0 || total % 24 != 0) {
    throw std::invalid_argument(
        "eta quotient leading q-power sum(d*e)/24 is not a non-negative integer");
  }
  return total / 24;
}

EtaQuotientSpec EtaQuotientSpec::parse(const std::string& text) {
  EtaQuotientSpec spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto caret = item.find('^');
    if (caret == std::string::npos) {
      throw std::invalid_argument("bad eta factor (expected d^e): " + item);
    }
    long d = std::strtol(item.substr(0, caret).c_str(), nullptr, 10);
    long e = std::strtol(item.substr(caret + 1).c_str(), nullptr, 10);
    if (d <= 0) throw std::invalid_argument("bad eta factor scale: " + item);
    spec.factors.emplace_back(d, e);
  }
  return spec;
}

std::string EtaQuotientSpec::to_string() const {
  std::string out;
  for (const auto& [d, e] : factors) {
    if (!out.empty()) out += ',';
    out += std::to_string(d) + "^" + std::to_string(e);
  }
  return out;
}

QExpansion eta_quotient(const EtaQuotientSpec& spec, long precision) {
  long shift = spec.leading_power();  // validates the spec
  if (precision < 0) throw std::invalid_argument("precision must be >= 0");

  std::vector<mpz_class> c(static_cast<size_t>(precision) + 1);
  c[0] = 1;
  for (const auto& [d, e] : spec.factors) {
    long count = e >= 0 ? e : -e;
    // eta^3 blocks keep the number of sparse passes low at large precision.
    std::vector<SparseTerm> cube, single;
    while (count >= 3) {
      if (cube.empty()) cube = euler_cube_series(d, precision);
      if (e >= 0) {
        multiply_sparse(c, cube);
      } else {
        divide_sparse(c, cube);
      }
      count -= 3;
    }
    while (count > 0) {
      if (single.empty()) single = euler_series(d, precision);
      if (e >= 0) {
        multiply_sparse(c, single);
      } else {
        divide_sparse(c, single);
      }
      --count;
    }
  }

  QExpansion out(precision);
  for (long n = precision; n >= shift; --n) {
    out.set_coeff(n, Rational(c[static_cast<size_t>(n - shift)]));
  }
  return out;
}

QExpansion NewformSpec::expansion(long precision) const {
  QExpansion f = eta_quotient(source, precision);
  f.weight = weight;
  f.level = level;
  return f;
}

NewformSpec newform_catalog(const std::string& label) {
  struct Entry {
    const char* label;
    long weight;
    long level;
    const char* eta;
  };
  static const Entry entries[] = {
      {"12.1", 12, 1, "1^24"},
      {"8.2", 8, 2, "1^8,2^8"},
      {"6.3", 6, 3, "1^6,3^6"},
      {"4.5", 4, 5, "1^4,5^4"},
      {"2.11", 2, 11, "1^2,11^2"},
  };
  for (const Entry& e : entries) {
    if (label == e.label) {
      NewformSpec spec;
      spec.weight = e.weight;
      spec.level = e.level;
      spec.source = EtaQuotientSpec::parse(e.eta);
      spec.label = e.label;
      return spec;
    }
  }
  throw std::invalid_argument("unknown newform label: " + label);
}

std::vector<std::string> newform_catalog_labels() {
  return {"12.1", "8.2", "6.3", "4.5", "2.11"};
}

}  // namespace siegelscan
