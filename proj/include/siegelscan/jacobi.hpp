#pragma once

#include <map>
#include <utility>

#include "siegelscan/qexp.hpp"

namespace siegelscan {

// Cohen's function H(r, D). H(r, 0) = zeta(1-2r); zero for D = 1, 2 mod 4.
Rational cohen_h(long r, long d);

// Jacobi form of weight k and index m, coefficients c(n, r) stored for
// 0 <= n <= precision and r^2 < 4nm, plus the singular keys r^2 = 4nm
// (and (0,0)) when the form is not cuspidal.
class JacobiExpansion {
 public:
  JacobiExpansion(long weight, long index, long precision, bool is_cusp)
      : weight_(weight), index_(index), precision_(precision), is_cusp_(is_cusp) {}

  long weight() const { return weight_; }
  long index() const { return index_; }
  long precision() const { return precision_; }
  bool is_cusp() const { return is_cusp_; }

  // Zero for r outside the stored support; throws for n outside 0..precision.
  Rational coeff(long n, long r) const;
  void set_coeff(long n, long r, const Rational& v);

  const std::map<std::pair<long, long>, Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  // z = 0 specialization: n-th coefficient is sum_r c(n, r).
  QExpansion specialize_z0() const;

 private:
  long weight_;
  long index_;
  long precision_;
  bool is_cusp_;
  std::map<std::pair<long, long>, Rational> coeffs_;
};

// Index-1 Jacobi Eisenstein series E_{k,1}, k in {4, 6}, c(0,0) = 1,
// c(n, r) = H(k-1, 4n - r^2) / H(k-1, 0).
JacobiExpansion jacobi_eisenstein(long k, long precision);

// Index-1 Jacobi cusp forms, k in {10, 12}:
//   phi_{10,1} = (E6 E_{4,1} - E4 E_{6,1}) / 144
//   phi_{12,1} = (E4^2 E_{4,1} - E6 E_{6,1}) / 144
// normalized so c(1,1) = 1.
JacobiExpansion jacobi_cusp_phi(long k, long precision);

// Normalized Taylor coefficient sum_n (sum_r c(n,r) r^nu) q^n; the paper's
// chi_nu with the transcendental factor (2 pi i)^nu / nu! dropped.
QExpansion taylor_coefficient(const JacobiExpansion& phi, long nu);

struct TaylorReport {
  long alpha = 0;                 // smallest even nu with nonzero series
  QExpansion chi_alpha_normalized;
  long alpha_bound = 0;           // 2m
  int i_alpha_sign = 1;           // i^alpha, +1 or -1
};

// Throws when phi is zero to its stored precision or when every nu <= 2m
// vanishes (undecidable at this precision).
TaylorReport first_nonzero_taylor_index(const JacobiExpansion& phi);

// B~(n) = sum_r c(n,r) r^nu for n = 1..up_to.
std::vector<Rational> b_coefficients(const JacobiExpansion& phi, long nu, long up_to);

}  // namespace siegelscan
