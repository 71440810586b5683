#include "siegelscan/jacobi.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace siegelscan {

namespace {

// Bernoulli polynomial B_n(x) = sum_i C(n, i) B_i x^{n-i}.
Rational bernoulli_polynomial(unsigned long n, const Rational& x) {
  Rational acc = 0;
  Integer binom = 1;
  Rational xpow = 1;
  // accumulate highest power first: C(n, i) B_i x^{n-i}
  std::vector<Rational> xpowers(n + 1);
  xpowers[0] = 1;
  for (unsigned long i = 1; i <= n; ++i) xpowers[i] = xpowers[i - 1] * x;
  for (unsigned long i = 0; i <= n; ++i) {
    acc += Rational(binom) * bernoulli_number(i) * xpowers[n - i];
    binom = binom * static_cast<long>(n - i) / static_cast<long>(i + 1);
  }
  return acc;
}

// L(1-r, chi_D) = -B_{r, chi_D} / r for a fundamental discriminant D.
Rational dirichlet_l_at_negative(long r, long disc) {
  if (disc == 1) {
    // trivial character: zeta(1 - r)
    if (r == 1) return Rational(-1, 2);
    return -bernoulli_number(static_cast<unsigned long>(r)) / Rational(r);
  }
  long q = disc > 0 ? disc : -disc;
  Rational b = 0;
  Integer disc_z(disc);
  for (long a = 1; a <= q; ++a) {
    int chi = mpz_kronecker_ui(disc_z.get_mpz_t(), static_cast<unsigned long>(a));
    if (chi == 0) continue;
    b += Rational(chi) * bernoulli_polynomial(static_cast<unsigned long>(r), Rational(a, q));
  }
  b *= Rational(integer_pow(Integer(q), static_cast<unsigned long>(r - 1)));
  return -b / Rational(r);
}

long mobius(long n) {
  long mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

Rational cohen_h(long r, long d) {
  if (r < 1) throw std::invalid_argument("cohen_h requires r >= 1");
  if (d < 0) throw std::invalid_argument("cohen_h requires D >= 0");
  if (d == 0) {
    // zeta(1 - 2r)
    return -bernoulli_number(static_cast<unsigned long>(2 * r)) / Rational(2 * r);
  }
  if (d % 4 == 1 || d % 4 == 2) return 0;

  long disc = (r % 2 == 0) ? d : -d;
  if (((disc % 4) + 4) % 4 > 1) return 0;

  // disc = disc0 * f^2 with disc0 fundamental.
  long square = 1;
  long rest = d;
  for (long p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square *= p;
    }
  }
  long f = square;
  long disc0 = disc / (f * f);
  if (((disc0 % 4) + 4) % 4 != 1) {
    if (f % 2 != 0) throw std::logic_error("cohen_h: inconsistent discriminant split");
    disc0 *= 4;
    f /= 2;
  }

  Rational l_value = dirichlet_l_at_negative(r, disc0);
  Rational sum = 0;
  Integer disc0_z(disc0);
  for (long dd = 1; dd <= f; ++dd) {
    if (f % dd != 0) continue;
    long mu = mobius(dd);
    if (mu == 0) continue;
    int chi = mpz_kronecker_ui(disc0_z.get_mpz_t(), static_cast<unsigned long>(dd));
    if (chi == 0) continue;
    Rational term = Rational(mu * chi) *
                    Rational(integer_pow(Integer(dd), static_cast<unsigned long>(r - 1))) *
                    Rational(divisor_power_sum(f / dd, static_cast<unsigned long>(2 * r - 1)));
    sum += term;
  }
  return l_value * sum;
}

Rational JacobiExpansion::coeff(long n, long r) const {
  if (n < 0 || n > precision_) {
    throw std::out_of_range("JacobiExpansion: n = " + std::to_string(n) +
                            " outside stored precision " + std::to_string(precision_));
  }
  auto it = coeffs_.find({n, r});
  if (it != coeffs_.end()) return it->second;
  long disc = 4 * n * index_ - r * r;
  if (disc > 0 || (!is_cusp_ && disc == 0)) {
    throw std::logic_error("JacobiExpansion: coefficient (" + std::to_string(n) + "," +
                           std::to_string(r) + ") inside support but not stored");
  }
  return 0;  // outside the support of a Jacobi form of this index
}

void JacobiExpansion::set_coeff(long n, long r, const Rational& v) {
  if (n < 0 || n > precision_) {
    throw std::out_of_range("JacobiExpansion: n outside stored precision");
  }
  coeffs_[{n, r}] = v;
}

bool JacobiExpansion::is_zero() const {
  for (const auto& [key, v] : coeffs_) {
    if (v != 0) return false;
  }
  return true;
}

QExpansion JacobiExpansion::specialize_z0() const {
  QExpansion out(precision_);
  for (const auto& [key, v] : coeffs_) {
    out.set_coeff(key.first, out.coeff(key.first) + v);
  }
  out.weight = weight_;
  return out;
}

JacobiExpansion jacobi_eisenstein(long k, long precision) {
  if (k != 4 && k != 6) {
    throw std::invalid_argument("jacobi_eisenstein supports k in {4, 6}");
  }
  Rational h0 = cohen_h(k - 1, 0);
  std::map<long, Rational> cache;  // discriminants repeat heavily across (n, r)
  JacobiExpansion out(k, 1, precision, /*is_cusp=*/false);
  for (long n = 0; n <= precision; ++n) {
    long rmax = 0;  // r^2 <= 4n
    while ((rmax + 1) * (rmax + 1) <= 4 * n) ++rmax;
    for (long r = -rmax; r <= rmax; ++r) {
      long disc = 4 * n - r * r;
      auto it = cache.find(disc);
      if (it == cache.end()) {
        it = cache.emplace(disc, cohen_h(k - 1, disc) / h0).first;
      }
      out.set_coeff(n, r, it->second);
    }
  }
  return out;
}

namespace {

// Elliptic series times Jacobi form, coefficientwise in n.
JacobiExpansion multiply_elliptic(const QExpansion& f, const JacobiExpansion& phi) {
  long prec = std::min(f.precision(), phi.precision());
  JacobiExpansion out(*f.weight + phi.weight(), phi.index(), prec, phi.is_cusp());
  for (long n = 0; n <= prec; ++n) {
    long rmax = 0;
    while ((rmax + 1) * (rmax + 1) <= 4 * n * phi.index()) ++rmax;
    for (long r = -rmax; r <= rmax; ++r) {
      Rational acc = 0;
      for (long j = 0; j <= n; ++j) {
        if (f.coeff(j) == 0) continue;
        long n2 = n - j;
        if (r * r > 4 * n2 * phi.index()) continue;
        acc += f.coeff(j) * phi.coeff(n2, r);
      }
      out.set_coeff(n, r, acc);
    }
  }
  return out;
}

}  // namespace

JacobiExpansion jacobi_cusp_phi(long k, long precision) {
  if (k != 10 && k != 12) {
    throw std::invalid_argument("jacobi_cusp_phi supports k in {10, 12}");
  }
  QExpansion e4 = eisenstein_qexp(4, precision);
  QExpansion e6 = eisenstein_qexp(6, precision);
  JacobiExpansion ej4 = jacobi_eisenstein(4, precision);
  JacobiExpansion ej6 = jacobi_eisenstein(6, precision);

  JacobiExpansion lhs = (k == 10) ? multiply_elliptic(e6, ej4)
                                  : multiply_elliptic(e4 * e4, ej4);
  JacobiExpansion rhs = (k == 10) ? multiply_elliptic(e4, ej6)
                                  : multiply_elliptic(e6, ej6);

  JacobiExpansion out(k, 1, precision, /*is_cusp=*/true);
  Rational inv144(1, 144);
  for (const auto& [key, v] : lhs.coeffs()) {
    auto [n, r] = key;
    Rational c = (v - rhs.coeff(n, r)) * inv144;
    if (r * r >= 4 * n) {
      // singular part of a cusp form must cancel exactly
      if (c != 0) throw std::logic_error("jacobi_cusp_phi: nonzero singular coefficient");
      continue;
    }
    out.set_coeff(n, r, c);
  }
  return out;
}

QExpansion taylor_coefficient(const JacobiExpansion& phi, long nu) {
  if (nu < 0) throw std::invalid_argument("taylor_coefficient requires nu >= 0");
  QExpansion out(phi.precision());
  for (const auto& [key, v] : phi.coeffs()) {
    auto [n, r] = key;
    if (v == 0) continue;
    Rational rp = 1;
    if (nu > 0) {
      if (r == 0) continue;
      rp = Rational(integer_pow(Integer(r), static_cast<unsigned long>(nu)));
    }
    out.set_coeff(n, out.coeff(n) + v * rp);
  }
  out.weight = phi.weight() + nu;
  return out;
}

TaylorReport first_nonzero_taylor_index(const JacobiExpansion& phi) {
  if (phi.is_zero()) {
    throw std::invalid_argument("first_nonzero_taylor_index: expansion is identically zero");
  }
  long bound = 2 * phi.index();
  for (long nu = 0; nu <= bound; nu += 2) {
    QExpansion chi = taylor_coefficient(phi, nu);
    if (!chi.is_zero()) {
      TaylorReport report;
      report.alpha = nu;
      report.chi_alpha_normalized = chi;
      report.alpha_bound = bound;
      report.i_alpha_sign = (nu % 4 == 0) ? 1 : -1;
      return report;
    }
  }
  throw std::runtime_error(
      "first_nonzero_taylor_index: all nu <= 2m vanish; "
      "undecidable at this precision (inconsistent input)");
}

std::vector<Rational> b_coefficients(const JacobiExpansion& phi, long nu, long up_to) {
  if (up_to > phi.precision()) {
    throw std::out_of_range("b_coefficients: up_to beyond stored precision");
  }
  QExpansion chi = taylor_coefficient(phi, nu);
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(up_to));
  for (long n = 1; n <= up_to; ++n) out.push_back(chi.coeff(n));
  return out;
}

}  // namespace siegelscan
