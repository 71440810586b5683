#include "siegelscan/siegel.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace siegelscan {

std::vector<HalfIntMatrix> enumerate_matrices(long trace) {
  std::vector<HalfIntMatrix> out;
  if (trace < 2) return out;
  for (long n = 1; n <= trace - 1; ++n) {
    long m = trace - n;
    long rmax = 0;  // r^2 < 4nm
    while ((rmax + 1) * (rmax + 1) < 4 * n * m) ++rmax;
    for (long r = -rmax; r <= rmax; ++r) {
      out.push_back({n, r, m});
    }
  }
  return out;
}

const Rational& SiegelExpansion::coeff(const HalfIntMatrix& t) const {
  if (!t.positive_definite()) {
    throw std::invalid_argument("SiegelExpansion: matrix not positive definite");
  }
  auto it = coeffs_.find({t.n, t.r, t.m});
  if (it == coeffs_.end()) {
    throw std::out_of_range("SiegelExpansion: trace " + std::to_string(t.trace()) +
                            " beyond stored bound " + std::to_string(trace_bound_));
  }
  return it->second;
}

void SiegelExpansion::set_coeff(const HalfIntMatrix& t, const Rational& v) {
  if (!t.positive_definite()) {
    throw std::invalid_argument("SiegelExpansion: matrix not positive definite");
  }
  coeffs_[{t.n, t.r, t.m}] = v;
}

SiegelExpansion maass_lift(const JacobiExpansion& phi, long trace_bound) {
  if (phi.index() != 1 || !phi.is_cusp()) {
    throw std::invalid_argument("maass_lift requires an index-1 Jacobi cusp form");
  }
  long needed = (trace_bound * trace_bound) / 4;
  if (phi.precision() < needed) {
    throw std::invalid_argument("maass_lift: phi precision " +
                                std::to_string(phi.precision()) +
                                " insufficient, need >= " + std::to_string(needed) +
                                " for trace bound " + std::to_string(trace_bound));
  }
  long k = phi.weight();
  SiegelExpansion out(k, 1, trace_bound);
  for (long trace = 2; trace <= trace_bound; ++trace) {
    for (const HalfIntMatrix& t : enumerate_matrices(trace)) {
      long g = std::gcd(std::gcd(t.n, std::abs(t.r)), t.m);
      Rational acc = 0;
      for (long d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        Rational c = phi.coeff(t.n * t.m / (d * d), t.r / d);
        if (c != 0) {
          acc += Rational(integer_pow(Integer(d), static_cast<unsigned long>(k - 1))) * c;
        }
      }
      out.set_coeff(t, acc);
    }
  }
  return out;
}

JacobiExpansion fourier_jacobi_slice(const SiegelExpansion& f, long m) {
  if (m < 1) throw std::invalid_argument("fourier_jacobi_slice requires m >= 1");
  if (f.trace_bound() < m + 1) {
    throw std::invalid_argument("fourier_jacobi_slice: index " + std::to_string(m) +
                                " too large for trace bound " +
                                std::to_string(f.trace_bound()));
  }
  long prec = f.trace_bound() - m;
  JacobiExpansion out(f.weight(), m, prec, /*is_cusp=*/true);
  for (long n = 1; n <= prec; ++n) {
    long rmax = 0;
    while ((rmax + 1) * (rmax + 1) < 4 * n * m) ++rmax;
    for (long r = -rmax; r <= rmax; ++r) {
      out.set_coeff(n, r, f.coeff({n, r, m}));
    }
  }
  return out;
}

namespace {

// Order used when picking the reported representative of each sign: the
// symmetric pair (n, -r, m) always carries the same value, so the r >= 0
// member is listed first.
std::vector<HalfIntMatrix> reporting_order(long trace) {
  std::vector<HalfIntMatrix> out;
  for (const HalfIntMatrix& t : enumerate_matrices(trace)) {
    if (t.r >= 0) out.push_back(t);
  }
  for (const HalfIntMatrix& t : enumerate_matrices(trace)) {
    if (t.r < 0) out.push_back(t);
  }
  return out;
}

double psi1_value(long n_level) {
  double value = std::pow(static_cast<double>(n_level), 3.0);
  for (long p : prime_factors(n_level)) {
    double pd = static_cast<double>(p);
    value *= (1.0 + 1.0 / pd) * (1.0 + 1.0 / (pd * pd));
  }
  return value;
}

}  // namespace

MinimalTraceReport minimal_nonzero_trace(const SiegelExpansion& f) {
  MinimalTraceReport report;
  report.bound_value = 4.0 / (3.0 * std::sqrt(3.0) * M_PI) *
                       static_cast<double>(f.weight()) * psi1_value(f.level());
  for (long trace = 2; trace <= f.trace_bound(); ++trace) {
    for (const HalfIntMatrix& t : enumerate_matrices(trace)) {
      if (f.coeff(t) != 0) {
        report.t0 = t;
        report.bound_ok = static_cast<double>(trace) <= report.bound_value;
        return report;
      }
    }
  }
  throw std::runtime_error("minimal_nonzero_trace: no nonzero coefficient found");
}

SignChangeReport scan_signs(const SiegelExpansion& f, long x, long h) {
  if (x + h > f.trace_bound()) {
    throw std::out_of_range("scan_signs: interval (" + std::to_string(x) + ", " +
                            std::to_string(x + h) + "] beyond stored trace bound " +
                            std::to_string(f.trace_bound()));
  }
  SignChangeReport report;
  report.interval_lo = x;
  report.interval_hi = x + h;
  for (long trace = std::max(2L, x + 1); trace <= x + h; ++trace) {
    for (const HalfIntMatrix& t : reporting_order(trace)) {
      const Rational& a = f.coeff(t);
      if (a > 0) {
        ++report.positives;
        if (!report.t_plus) report.t_plus = t;
      } else if (a < 0) {
        ++report.negatives;
        if (!report.t_minus) report.t_minus = t;
      }
    }
  }
  return report;
}

FirstSignChange first_sign_change(const SiegelExpansion& f) {
  std::optional<HalfIntMatrix> t1, t2;
  for (long trace = 2; trace <= f.trace_bound() && !(t1 && t2); ++trace) {
    for (const HalfIntMatrix& t : reporting_order(trace)) {
      const Rational& a = f.coeff(t);
      if (a > 0 && !t1) t1 = t;
      if (a < 0 && !t2) t2 = t;
    }
  }
  if (!t1 && !t2) {
    throw std::runtime_error("first_sign_change: expansion is zero to stored bound");
  }
  if (!t1 || !t2) {
    throw std::runtime_error(
        "first_sign_change: only one sign present up to trace bound; "
        "undecided at this truncation");
  }
  return {*t1, *t2, std::max(t1->trace(), t2->trace())};
}

std::pair<long, long> count_signs_interval(const SiegelExpansion& f, long x) {
  if (2 * x > f.trace_bound()) {
    throw std::out_of_range("count_signs_interval: 2x beyond stored trace bound");
  }
  SignChangeReport report = scan_signs(f, x, x);
  return {report.positives, report.negatives};
}

}  // namespace siegelscan
