#pragma once

#include <map>
#include <string>
#include <vector>

#include "siegelscan/eta.hpp"

namespace siegelscan {

struct ConvexityStrip {
  double a = 0.0;
  double b = 1.0;
  double p = 1.0;      // requires p + a > 0
  double e_const = 1.0;
  double f_const = 1.0;
  double alpha = 0.0;  // requires alpha >= beta
  double beta = 0.0;
};

// The paper's unspecified absolute constants, all defaulting to 1.
struct BoundParams {
  double c1 = 1.0, c2 = 1.0, c3 = 1.0, c4 = 1.0, c5 = 1.0, c6 = 1.0, c7 = 1.0;
  double cprime = 1.0, a1 = 1.0, a2 = 1.0, ctilde = 1.0;
  double eps = 0.01;

  void set(const std::string& name, double value);
};

struct PartialSumReport {
  long x = 0;
  double raw_sum = 0.0;       // sum lambda^e(n)
  double smoothed_log = 0.0;  // sum lambda^e(n) log(x/n)
  double smoothed_log2 = 0.0; // sum lambda^e(n) log^2(x/n)
  double main_term = 0.0;
  double normalized_slope = 0.0;
};

enum class SumMode { square_raw, square_log, square_log2, linear_raw, linear_log };

SumMode sum_mode_from_string(const std::string& name);
std::string sum_mode_to_string(SumMode mode);

// Exact integer coefficients a_f(1..up_to) of a catalog newform.
std::vector<Integer> newform_coefficients(const NewformSpec& f, long up_to);

// lambda_f(n) = a_f(n) / n^{(k-1)/2}, index 1..up_to (entry 0 unused).
std::vector<double> normalized_coeffs(const NewformSpec& f, long up_to);

// n with |lambda_f(n)| > tau(n) + 1e-9; empty for genuine newforms.
std::vector<long> deligne_check(const NewformSpec& f, long up_to);
std::vector<long> deligne_check(const std::vector<double>& lambda, long up_to);

std::vector<double> normalized_from_integers(const std::vector<Integer>& a, long weight);

PartialSumReport rs_partial_sum(const NewformSpec& f, long x, SumMode mode);
PartialSumReport rs_partial_sum(const std::vector<double>& lambda, long n_level,
                                long x, SumMode mode);

// (6/pi^2) prod_{p|N} (1 + 1/p)^{-1}.
double rs_main_term_constant(long n_level);

// Rademacher / Phragmen-Lindelof interpolation of edge bounds on a strip.
double rademacher_bound(const ConvexityStrip& strip, double sigma, double t);

struct BoundResult {
  double value = 0.0;
  std::string branch;  // psi2 reports which max() branch was active
};

// name in {psi1, psi2, phi_ell, d_const, thm1_bound, thm2_threshold,
// nu_bound, trace_t0_bound}; params keyed by "k", "N", "ell", "eps".
BoundResult evaluate_bound(const std::string& name,
                           const std::map<std::string, double>& params,
                           const BoundParams& consts);

struct ZetaFactorResult {
  double value = 1.0;
  double tail_bound = 0.0;  // integral bound on sum_{p > terms} p^{-s}
};

// Truncated Euler product prod_{p <= terms, p not | N} (1 - p^{-s})^{-1}, s > 1.
ZetaFactorResult zeta_n_factor(long n_level, double s, long terms);

std::vector<long> primes_up_to(long bound);

}  // namespace siegelscan
