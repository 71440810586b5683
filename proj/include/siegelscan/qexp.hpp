#pragma once

#include <optional>
#include <vector>

#include "siegelscan/rational.hpp"

namespace siegelscan {

// Truncated q-series with exact rational coefficients. "Precision P" means
// exponents 0..P are stored; reading past P throws, it is never a silent zero.
class QExpansion {
 public:
  QExpansion() : coeffs_(1) {}
  explicit QExpansion(long precision);

  static QExpansion constant(const Rational& c, long precision);

  long precision() const { return static_cast<long>(coeffs_.size()) - 1; }

  const Rational& coeff(long n) const;
  void set_coeff(long n, const Rational& v);

  bool is_zero() const;

  QExpansion truncated(long precision) const;

  // Arithmetic carries precision = min of the operands. Adding series of
  // different weight clears the weight metadata, it never errors.
  QExpansion operator+(const QExpansion& rhs) const;
  QExpansion operator-(const QExpansion& rhs) const;
  QExpansion operator*(const QExpansion& rhs) const;
  QExpansion scale(const Rational& c) const;
  QExpansion pow(unsigned long e) const;

  bool operator==(const QExpansion& rhs) const;

  std::optional<long> weight;
  std::optional<long> level;

 private:
  std::vector<Rational> coeffs_;
};

// Normalized level-1 Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
QExpansion eisenstein_qexp(long k, long precision);

// (f | V_delta)(z) = f(delta z): exponent dilation, output precision equals
// input precision.
QExpansion v_operator(const QExpansion& f, long delta);

// f | prod_{p | N/d} (1 + eps_p p^{k/2} V_p), expanded over the divisors of N/d.
QExpansion oldform_combination(const QExpansion& f, long k, long d, long n_level,
                               const std::vector<std::pair<long, int>>& signs,
                               long precision);

// Exact Bernoulli number B_n.
Rational bernoulli_number(unsigned long n);

// sigma_k(n) = sum of k-th powers of divisors.
Integer divisor_power_sum(long n, unsigned long k);

bool is_square_free(long n);
std::vector<long> prime_factors(long n);

}  // namespace siegelscan
