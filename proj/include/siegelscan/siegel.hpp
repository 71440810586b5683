#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "siegelscan/jacobi.hpp"

namespace siegelscan {

// T = [[n, r/2], [r/2, m]], positive definite: n, m >= 1 and 4nm - r^2 > 0.
struct HalfIntMatrix {
  long n = 1;
  long r = 0;
  long m = 1;

  long trace() const { return n + m; }
  long discriminant() const { return 4 * n * m - r * r; }
  bool positive_definite() const { return n >= 1 && m >= 1 && discriminant() > 0; }

  auto operator<=>(const HalfIntMatrix&) const = default;
};

// All positive definite (n, r, m) with n + m = trace, ascending (n, then r).
std::vector<HalfIntMatrix> enumerate_matrices(long trace);

// Degree-2 Siegel cusp form expansion, dense up to trace_bound: every
// positive definite T with trace <= trace_bound has a stored coefficient.
class SiegelExpansion {
 public:
  SiegelExpansion(long weight, long level, long trace_bound)
      : weight_(weight), level_(level), trace_bound_(trace_bound) {}

  long weight() const { return weight_; }
  long level() const { return level_; }
  long trace_bound() const { return trace_bound_; }

  const Rational& coeff(const HalfIntMatrix& t) const;
  void set_coeff(const HalfIntMatrix& t, const Rational& v);

  const std::map<std::tuple<long, long, long>, Rational>& coeffs() const {
    return coeffs_;
  }

 private:
  long weight_;
  long level_;
  long trace_bound_;
  std::map<std::tuple<long, long, long>, Rational> coeffs_;  // (n, r, m)
};

// Saito-Kurokawa / Maass lift of an index-1 Jacobi cusp form:
// a(n, r, m) = sum_{d | gcd(n, r, m)} d^{k-1} c(nm/d^2, r/d), level 1.
// Requires phi precision >= floor(trace_bound^2 / 4).
SiegelExpansion maass_lift(const JacobiExpansion& phi, long trace_bound);

// Fourier-Jacobi slice phi_m: c(n, r) = a(n, r, m), n <= trace_bound - m.
JacobiExpansion fourier_jacobi_slice(const SiegelExpansion& f, long m);

struct MinimalTraceReport {
  HalfIntMatrix t0;
  bool bound_ok = false;
  double bound_value = 0.0;  // (4 / (3 sqrt(3) pi)) k Psi_1(N)
};

MinimalTraceReport minimal_nonzero_trace(const SiegelExpansion& f);

struct SignChangeReport {
  std::optional<HalfIntMatrix> t_plus;
  std::optional<HalfIntMatrix> t_minus;
  long interval_lo = 0;  // interval (x, x+h]
  long interval_hi = 0;
  long positives = 0;
  long negatives = 0;
};

// Scans traces in (x, x+h]; reported matrices are the first of each sign in
// enumeration order.
SignChangeReport scan_signs(const SiegelExpansion& f, long x, long h);

struct FirstSignChange {
  HalfIntMatrix t1;  // a(t1) > 0, minimal trace among positives
  HalfIntMatrix t2;  // a(t2) < 0, minimal trace among negatives
  long max_trace = 0;
};

FirstSignChange first_sign_change(const SiegelExpansion& f);

// Counts of strictly positive / strictly negative coefficients with trace in (x, 2x].
std::pair<long, long> count_signs_interval(const SiegelExpansion& f, long x);

}  // namespace siegelscan
