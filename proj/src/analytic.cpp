#include "siegelscan/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace siegelscan {

void BoundParams::set(const std::string& name, double value) {
  if (value < 0 && name != "eps") {
    throw std::invalid_argument("bound constant " + name + " must be non-negative");
  }
  if (name == "c1") c1 = value;
  else if (name == "c2") c2 = value;
  else if (name == "c3") c3 = value;
  else if (name == "c4") c4 = value;
  else if (name == "c5") c5 = value;
  else if (name == "c6") c6 = value;
  else if (name == "c7") c7 = value;
  else if (name == "cprime") cprime = value;
  else if (name == "a1") a1 = value;
  else if (name == "a2") a2 = value;
  else if (name == "ctilde") ctilde = value;
  else if (name == "eps") {
    if (value <= 0) throw std::invalid_argument("eps must be positive");
    eps = value;
  } else {
    throw std::invalid_argument("unknown bound constant: " + name);
  }
}

SumMode sum_mode_from_string(const std::string& name) {
  if (name == "square_raw") return SumMode::square_raw;
  if (name == "square_log") return SumMode::square_log;
  if (name == "square_log2") return SumMode::square_log2;
  if (name == "linear_raw") return SumMode::linear_raw;
  if (name == "linear_log") return SumMode::linear_log;
  throw std::invalid_argument("unknown sum mode: " + name);
}

std::string sum_mode_to_string(SumMode mode) {
  switch (mode) {
    case SumMode::square_raw: return "square_raw";
    case SumMode::square_log: return "square_log";
    case SumMode::square_log2: return "square_log2";
    case SumMode::linear_raw: return "linear_raw";
    case SumMode::linear_log: return "linear_log";
  }
  throw std::logic_error("bad mode");
}

std::vector<Integer> newform_coefficients(const NewformSpec& f, long up_to) {
  QExpansion q = f.expansion(up_to);
  std::vector<Integer> out(static_cast<size_t>(up_to) + 1);
  for (long n = 1; n <= up_to; ++n) {
    const Rational& c = q.coeff(n);
    if (c.get_den() != 1) {
      throw std::logic_error("newform coefficient not integral at n = " + std::to_string(n));
    }
    out[static_cast<size_t>(n)] = c.get_num();
  }
  if (out[1] != 1) throw std::logic_error("newform not normalized: a(1) != 1");
  return out;
}

std::vector<double> normalized_from_integers(const std::vector<Integer>& a, long weight) {
  std::vector<double> lambda(a.size(), 0.0);
  double half_exp = (static_cast<double>(weight) - 1.0) / 2.0;
  for (size_t n = 1; n < a.size(); ++n) {
    lambda[n] = a[n].get_d() / std::pow(static_cast<double>(n), half_exp);
  }
  return lambda;
}

std::vector<double> normalized_coeffs(const NewformSpec& f, long up_to) {
  return normalized_from_integers(newform_coefficients(f, up_to), f.weight);
}

namespace {

std::vector<long> divisor_counts(long up_to) {
  std::vector<long> tau(static_cast<size_t>(up_to) + 1, 0);
  for (long d = 1; d <= up_to; ++d) {
    for (long n = d; n <= up_to; n += d) ++tau[static_cast<size_t>(n)];
  }
  return tau;
}

}  // namespace

std::vector<long> deligne_check(const NewformSpec& f, long up_to) {
  return deligne_check(normalized_coeffs(f, up_to), up_to);
}

std::vector<long> deligne_check(const std::vector<double>& lambda, long up_to) {
  if (up_to >= static_cast<long>(lambda.size())) {
    throw std::out_of_range("deligne_check: up_to beyond computed coefficients");
  }
  std::vector<long> tau = divisor_counts(up_to);
  std::vector<long> violations;
  for (long n = 1; n <= up_to; ++n) {
    if (std::fabs(lambda[static_cast<size_t>(n)]) >
        static_cast<double>(tau[static_cast<size_t>(n)]) + 1e-9) {
      violations.push_back(n);
    }
  }
  return violations;
}

PartialSumReport rs_partial_sum(const std::vector<double>& lambda, long n_level,
                                long x, SumMode mode) {
  if (x < 1) throw std::invalid_argument("rs_partial_sum requires x >= 1");
  if (x >= static_cast<long>(lambda.size())) {
    throw std::out_of_range("rs_partial_sum: x beyond computed coefficients");
  }
  bool square = (mode == SumMode::square_raw || mode == SumMode::square_log ||
                 mode == SumMode::square_log2);
  double raw = 0.0, slog = 0.0, slog2 = 0.0;
  double logx = std::log(static_cast<double>(x));
  for (long n = 1; n <= x; ++n) {
    double v = lambda[static_cast<size_t>(n)];
    if (square) v *= v;
    double w = logx - std::log(static_cast<double>(n));
    raw += v;
    slog += v * w;
    slog2 += v * w * w;
  }
  double weight_factor = 0.0;
  if (mode == SumMode::square_raw || mode == SumMode::square_log) weight_factor = 1.0;
  if (mode == SumMode::square_log2) weight_factor = 2.0;
  PartialSumReport report;
  report.x = x;
  report.raw_sum = raw;
  report.smoothed_log = slog;
  report.smoothed_log2 = slog2;
  report.main_term = weight_factor * rs_main_term_constant(n_level) * static_cast<double>(x);
  report.normalized_slope =
      report.main_term != 0.0 ? raw / report.main_term : raw / static_cast<double>(x);
  return report;
}

PartialSumReport rs_partial_sum(const NewformSpec& f, long x, SumMode mode) {
  return rs_partial_sum(normalized_coeffs(f, x), f.level, x, mode);
}

double rs_main_term_constant(long n_level) {
  if (n_level < 1 || !is_square_free(n_level)) {
    throw std::invalid_argument("rs_main_term_constant requires square-free N >= 1");
  }
  double value = 6.0 / (M_PI * M_PI);
  for (long p : prime_factors(n_level)) {
    value /= 1.0 + 1.0 / static_cast<double>(p);
  }
  return value;
}

double rademacher_bound(const ConvexityStrip& strip, double sigma, double t) {
  if (!(strip.a < strip.b)) throw std::invalid_argument("strip requires a < b");
  if (!(strip.p + strip.a > 0)) throw std::invalid_argument("strip requires P + a > 0");
  if (!(strip.alpha >= strip.beta)) throw std::invalid_argument("strip requires alpha >= beta");
  if (!(strip.e_const > 0) || !(strip.f_const > 0)) {
    throw std::invalid_argument("strip requires E, F > 0");
  }
  if (sigma < strip.a || sigma > strip.b) {
    throw std::invalid_argument("rademacher_bound: sigma outside [a, b]");
  }
  double modulus = std::hypot(strip.p + sigma, t);
  double wa = (strip.b - sigma) / (strip.b - strip.a);
  double wb = (sigma - strip.a) / (strip.b - strip.a);
  return std::pow(strip.e_const * std::pow(modulus, strip.alpha), wa) *
         std::pow(strip.f_const * std::pow(modulus, strip.beta), wb);
}

namespace {

double require_param(const std::map<std::string, double>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw std::invalid_argument("evaluate_bound: missing parameter " + key);
  }
  return it->second;
}

long integral_param(const std::map<std::string, double>& params, const std::string& key) {
  double v = require_param(params, key);
  long n = static_cast<long>(v);
  if (v != static_cast<double>(n) || n < 1) {
    throw std::invalid_argument("evaluate_bound: parameter " + key +
                                " must be a positive integer");
  }
  return n;
}

double psi1(long n_level) {
  double value = std::pow(static_cast<double>(n_level), 3.0);
  for (long p : prime_factors(n_level)) {
    double pd = static_cast<double>(p);
    value *= (1.0 + 1.0 / pd) * (1.0 + 1.0 / (pd * pd));
  }
  return value;
}

double level_exponential(double c, long n_level) {
  double nn = static_cast<double>(n_level);
  return std::exp(c * std::log(nn + 1.0) / std::log(std::log(nn + 2.0)));
}

}  // namespace

BoundResult evaluate_bound(const std::string& name,
                           const std::map<std::string, double>& params,
                           const BoundParams& consts) {
  BoundResult result;
  if (name == "psi1") {
    long n_level = integral_param(params, "N");
    if (!is_square_free(n_level)) {
      throw std::invalid_argument("psi1 requires square-free N");
    }
    result.value = psi1(n_level);
    return result;
  }
  if (name == "trace_t0_bound") {
    long n_level = integral_param(params, "N");
    double k = require_param(params, "k");
    result.value = 4.0 / (3.0 * std::sqrt(3.0) * M_PI) * k * psi1(n_level);
    return result;
  }
  if (name == "phi_ell") {
    long n_level = integral_param(params, "N");
    double ell = require_param(params, "ell");
    double value = 1.0;
    for (long p : prime_factors(n_level)) {
      value *= std::log(ell * static_cast<double>(n_level)) / std::log(static_cast<double>(p));
    }
    result.value = value;
    return result;
  }
  if (name == "psi2") {
    long n_level = integral_param(params, "N");
    double k = require_param(params, "k");
    if (k < 2) throw std::invalid_argument("psi2 requires k >= 2");
    double nn = static_cast<double>(n_level);
    double log_kn = std::log(k * nn);
    double product_branch = 1.0;
    for (long p : prime_factors(n_level)) {
      product_branch *= log_kn / std::log(static_cast<double>(p));
    }
    double power_branch = k * k * std::sqrt(nn) * std::pow(log_kn, 16.0);
    result.branch = product_branch >= power_branch ? "product" : "power";
    result.value = std::pow(k, 3.0) * std::pow(nn, 4.0) * std::pow(log_kn, 10.0) *
                   level_exponential(consts.c1, n_level) *
                   std::max(product_branch, power_branch);
    return result;
  }
  if (name == "d_const") {
    long k = integral_param(params, "k");
    if (k < 2) throw std::invalid_argument("d_const requires k >= 2");
    long n_level = params.count("N") ? integral_param(params, "N") : 1;
    double value = 2.0 * M_PI * M_PI *
                   std::exp(static_cast<double>(k - 1) * std::log(4.0 * M_PI) -
                            std::lgamma(static_cast<double>(k)));
    for (long p : prime_factors(n_level)) {
      value *= 1.0 + 1.0 / static_cast<double>(p);
    }
    result.value = value;
    return result;
  }
  if (name == "thm1_bound") {
    long n_level = integral_param(params, "N");
    double k = require_param(params, "k");
    if (k < 2) throw std::invalid_argument("thm1_bound requires k >= 2");
    result.value = std::pow(k, 5.0) * std::pow(std::log(k), 26.0) *
                   std::pow(static_cast<double>(n_level), 39.0 / 2.0) *
                   level_exponential(consts.c2, n_level);
    return result;
  }
  if (name == "thm2_threshold") {
    long n_level = integral_param(params, "N");
    double k = require_param(params, "k");
    if (k < 2) throw std::invalid_argument("thm2_threshold requires k >= 2");
    result.value = std::pow(k, 42.0) * std::pow(static_cast<double>(n_level), 84.0) *
                   std::pow(std::log(k), 80.0) * level_exponential(consts.c7, n_level);
    return result;
  }
  if (name == "nu_bound") {
    long n_level = integral_param(params, "N");
    if (n_level < 3) throw std::invalid_argument("nu_bound requires N >= 3");
    double nn = static_cast<double>(n_level);
    result.value = (1.0 + consts.eps) * std::log(nn) / std::log(std::log(nn));
    return result;
  }
  throw std::invalid_argument("unknown bound name: " + name);
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
  for (long p = 2; p <= bound; ++p) {
    if (composite[static_cast<size_t>(p)]) continue;
    primes.push_back(p);
    for (long q = p * p; q <= bound; q += p) composite[static_cast<size_t>(q)] = true;
  }
  return primes;
}

ZetaFactorResult zeta_n_factor(long n_level, double s, long terms) {
  if (!(s > 1.0)) {
    throw std::invalid_argument("zeta_n_factor requires s > 1 (absolute convergence)");
  }
  if (n_level < 1) throw std::invalid_argument("zeta_n_factor requires N >= 1");
  ZetaFactorResult result;
  for (long p : primes_up_to(terms)) {
    if (n_level % p == 0) continue;
    result.value /= 1.0 - std::pow(static_cast<double>(p), -s);
  }
  if (terms >= 2) {
    result.tail_bound = std::pow(static_cast<double>(terms), 1.0 - s) / (s - 1.0);
  } else {
    result.tail_bound = 1.0 / (s - 1.0);
  }
  return result;
}

}  // namespace siegelscan
