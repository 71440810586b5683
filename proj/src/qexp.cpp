#include "siegelscan/qexp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace siegelscan {

QExpansion::QExpansion(long precision) {
  if (precision < 0) {
    throw std::invalid_argument("QExpansion precision must be >= 0");
  }
  coeffs_.assign(static_cast<size_t>(precision) + 1, Rational(0));
}

QExpansion QExpansion::constant(const Rational& c, long precision) {
  QExpansion out(precision);
  out.coeffs_[0] = c;
  return out;
}

const Rational& QExpansion::coeff(long n) const {
  if (n < 0 || n > precision()) {
    throw std::out_of_range("QExpansion: exponent " + std::to_string(n) +
                            " outside stored precision " + std::to_string(precision()));
  }
  return coeffs_[static_cast<size_t>(n)];
}

void QExpansion::set_coeff(long n, const Rational& v) {
  if (n < 0 || n > precision()) {
    throw std::out_of_range("QExpansion: exponent " + std::to_string(n) +
                            " outside stored precision " + std::to_string(precision()));
  }
  coeffs_[static_cast<size_t>(n)] = v;
}

bool QExpansion::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

QExpansion QExpansion::truncated(long precision) const {
  if (precision > this->precision()) {
    throw std::out_of_range("QExpansion::truncated cannot extend precision");
  }
  QExpansion out(precision);
  out.weight = weight;
  out.level = level;
  for (long n = 0; n <= precision; ++n) out.coeffs_[n] = coeffs_[n];
  return out;
}

namespace {

std::optional<long> merge_equal(const std::optional<long>& a, const std::optional<long>& b) {
  if (a && b && *a == *b) return a;
  return std::nullopt;
}

}  // namespace

QExpansion QExpansion::operator+(const QExpansion& rhs) const {
  QExpansion out(std::min(precision(), rhs.precision()));
  for (long n = 0; n <= out.precision(); ++n) {
    out.coeffs_[n] = coeffs_[n] + rhs.coeffs_[n];
  }
  out.weight = merge_equal(weight, rhs.weight);
  out.level = merge_equal(level, rhs.level);
  return out;
}

QExpansion QExpansion::operator-(const QExpansion& rhs) const {
  QExpansion out(std::min(precision(), rhs.precision()));
  for (long n = 0; n <= out.precision(); ++n) {
    out.coeffs_[n] = coeffs_[n] - rhs.coeffs_[n];
  }
  out.weight = merge_equal(weight, rhs.weight);
  out.level = merge_equal(level, rhs.level);
  return out;
}

QExpansion QExpansion::operator*(const QExpansion& rhs) const {
  QExpansion out(std::min(precision(), rhs.precision()));
  Rational term;
  for (long i = 0; i <= out.precision(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (long j = 0; i + j <= out.precision(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      term = coeffs_[i] * rhs.coeffs_[j];
      out.coeffs_[i + j] += term;
    }
  }
  if (weight && rhs.weight) out.weight = *weight + *rhs.weight;
  out.level = merge_equal(level, rhs.level);
  return out;
}

QExpansion QExpansion::scale(const Rational& c) const {
  QExpansion out(precision());
  for (long n = 0; n <= precision(); ++n) out.coeffs_[n] = coeffs_[n] * c;
  out.weight = weight;
  out.level = level;
  return out;
}

QExpansion QExpansion::pow(unsigned long e) const {
  QExpansion result = constant(1, precision());
  QExpansion base = *this;
  unsigned long k = e;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1UL;
    if (k > 0) base = base * base;
  }
  if (weight) result.weight = *weight * static_cast<long>(e);
  result.level = e > 0 ? level : std::nullopt;
  return result;
}

bool QExpansion::operator==(const QExpansion& rhs) const {
  return precision() == rhs.precision() && coeffs_ == rhs.coeffs_;
}

Rational bernoulli_number(unsigned long n) {
  // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j, with B_1 = -1/2.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned long m = 1; m <= n; ++m) {
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, j), updated incrementally
    for (unsigned long j = 0; j < m; ++j) {
      acc += Rational(binom) * b[j];
      binom = binom * static_cast<long>(m + 1 - j) / static_cast<long>(j + 1);
    }
    b[m] = -acc / Rational(static_cast<long>(m) + 1);
  }
  return b[n];
}

Integer divisor_power_sum(long n, unsigned long k) {
  if (n <= 0) throw std::invalid_argument("divisor_power_sum requires n >= 1");
  Integer total = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += integer_pow(Integer(d), k);
    long e = n / d;
    if (e != d) total += integer_pow(Integer(e), k);
  }
  return total;
}

QExpansion eisenstein_qexp(long k, long precision) {
  if (k < 4 || k % 2 != 0) {
    throw std::invalid_argument("eisenstein_qexp requires even k >= 4");
  }
  QExpansion out = QExpansion::constant(1, precision);
  Rational factor = Rational(-2 * k) / bernoulli_number(static_cast<unsigned long>(k));
  for (long n = 1; n <= precision; ++n) {
    out.set_coeff(n, factor * Rational(divisor_power_sum(n, static_cast<unsigned long>(k - 1))));
  }
  out.weight = k;
  out.level = 1;
  return out;
}

QExpansion v_operator(const QExpansion& f, long delta) {
  if (delta <= 0) throw std::invalid_argument("v_operator requires delta >= 1");
  if (delta == 1) return f;
  QExpansion out(f.precision());
  for (long n = 0; delta * n <= f.precision(); ++n) {
    out.set_coeff(delta * n, f.coeff(n));
  }
  out.weight = f.weight;
  return out;
}

bool is_square_free(long n) {
  if (n <= 0) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

QExpansion oldform_combination(const QExpansion& f, long k, long d, long n_level,
                               const std::vector<std::pair<long, int>>& signs,
                               long precision) {
  if (!is_square_free(n_level)) {
    throw std::invalid_argument("oldform_combination requires square-free N");
  }
  if (d <= 0 || n_level % d != 0) {
    throw std::invalid_argument("oldform_combination requires d | N");
  }
  if (k % 2 != 0) {
    throw std::invalid_argument("oldform_combination requires even k (p^{k/2} must be integral)");
  }
  long quotient = n_level / d;
  std::vector<long> ps = prime_factors(quotient);
  std::vector<int> eps(ps.size());
  for (size_t i = 0; i < ps.size(); ++i) {
    bool found = false;
    for (const auto& [p, s] : signs) {
      if (p == ps[i]) {
        if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
        eps[i] = s;
        found = true;
      }
    }
    if (!found) {
      throw std::invalid_argument("missing sign for prime " + std::to_string(ps[i]));
    }
  }

  QExpansion result(std::min(precision, f.precision()));
  // Sum over delta | N/d via subsets of the prime factors.
  for (size_t mask = 0; mask < (1ULL << ps.size()); ++mask) {
    long delta = 1;
    int eps_delta = 1;
    for (size_t i = 0; i < ps.size(); ++i) {
      if (mask & (1ULL << i)) {
        delta *= ps[i];
        eps_delta *= eps[i];
      }
    }
    Integer scale_int = integer_pow(Integer(delta), static_cast<unsigned long>(k / 2));
    Rational c = Rational(eps_delta) * Rational(scale_int);
    result = result + v_operator(f, delta).scale(c);
  }
  result.weight = k;
  result.level = n_level;
  return result;
}

}  // namespace siegelscan
