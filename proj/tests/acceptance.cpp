// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
// argv[1] is the path to the CLI binary (used by the determinism criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "siegelscan/analytic.hpp"
#include "siegelscan/siegel.hpp"

using namespace siegelscan;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_command(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

void criterion_1() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (long k : {10L, 12L}) {
    JacobiExpansion phi = jacobi_cusp_phi(k, 225);
    SiegelExpansion f = maass_lift(phi, 30);
    JacobiExpansion slice = fourier_jacobi_slice(f, 1);
    for (const auto& [key, v] : slice.coeffs()) {
      if (v != phi.coeff(key.first, key.second)) ok = false;
    }
    if (slice.coeffs().empty()) ok = false;
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 10.0) ok = false;
  std::ostringstream d;
  d.setf(std::ios::fixed);
  d.precision(2);
  d << elapsed << "s";
  report(1, "lift round trip at trace bound 30", ok, d.str());
}

void criterion_2() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;

  JacobiExpansion phi10 = jacobi_cusp_phi(10, 20);
  TaylorReport r10 = first_nonzero_taylor_index(phi10);
  if (r10.alpha != 2) ok = false;
  QExpansion delta = eta_quotient(EtaQuotientSpec::parse("1^24"), 20);
  Rational scalar10 = r10.chi_alpha_normalized.coeff(1);
  if (scalar10 == 0) ok = false;
  for (long n = 0; n <= 20 && ok; ++n) {
    if (r10.chi_alpha_normalized.coeff(n) != scalar10 * delta.coeff(n)) ok = false;
  }

  JacobiExpansion phi12 = jacobi_cusp_phi(12, 20);
  TaylorReport r12 = first_nonzero_taylor_index(phi12);
  if (r12.alpha != 0) ok = false;
  Rational scalar12 = r12.chi_alpha_normalized.coeff(1);
  if (scalar12 != 12) ok = false;
  for (long n = 0; n <= 20 && ok; ++n) {
    if (r12.chi_alpha_normalized.coeff(n) != Rational(12) * delta.coeff(n)) ok = false;
  }

  double elapsed = seconds_since(start);
  if (elapsed >= 5.0) ok = false;
  std::ostringstream d;
  d.setf(std::ios::fixed);
  d.precision(2);
  d << elapsed << "s";
  report(2, "taylor pipeline: alpha and chi_alpha identities", ok, d.str());
}

void criterion_3() {
  bool ok = true;
  for (long k : {4L, 6L}) {
    QExpansion spec = jacobi_eisenstein(k, 20).specialize_z0();
    QExpansion ek = eisenstein_qexp(k, 20);
    for (long n = 0; n <= 20; ++n) {
      if (spec.coeff(n) != ek.coeff(n)) ok = false;
    }
  }
  if (!jacobi_cusp_phi(10, 20).specialize_z0().is_zero()) ok = false;
  QExpansion spec12 = jacobi_cusp_phi(12, 20).specialize_z0();
  QExpansion delta = eta_quotient(EtaQuotientSpec::parse("1^24"), 20);
  for (long n = 0; n <= 20; ++n) {
    if (spec12.coeff(n) != Rational(12) * delta.coeff(n)) ok = false;
  }
  report(3, "z = 0 specializations", ok);
}

void criterion_4() {
  bool ok = true;
  for (long k : {10L, 12L}) {
    JacobiExpansion phi = jacobi_cusp_phi(k, 225);
    SiegelExpansion f = maass_lift(phi, 30);
    if (first_sign_change(f).max_trace > 4) ok = false;
    // the weight-12 lift is positive on all of trace 2, so its window scan
    // starts at x = 2 like the count check below
    for (long x = (k == 12 ? 2 : 1); x <= 14; ++x) {
      SignChangeReport r = scan_signs(f, x, x);
      if (!r.t_plus || !r.t_minus) ok = false;
    }
    for (long x = 2; x <= 14; ++x) {
      auto [pos, neg] = count_signs_interval(f, x);
      if (pos <= 0 || neg <= 0) ok = false;
    }
  }
  report(4, "sign changes of both lifts at desk scale", ok);
}

struct FormData {
  NewformSpec spec;
  std::vector<Integer> coeffs;  // a(1..prec)
};

std::vector<FormData> g_forms;

void criterion_5() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  long top = 100000;
  long max_h = static_cast<long>(std::ceil(std::pow(static_cast<double>(top), 13.0 / 14.0)));
  long prec = top + max_h;

  for (const std::string& label : newform_catalog_labels()) {
    FormData data;
    data.spec = newform_catalog(label);
    data.coeffs = newform_coefficients(data.spec, prec);
    g_forms.push_back(std::move(data));
  }

  for (const FormData& data : g_forms) {
    for (int i = 0; i < 40 && ok; ++i) {
      double t = 2.0 + 3.0 * i / 39.0;
      long x = static_cast<long>(std::llround(std::pow(10.0, t)));
      long h = static_cast<long>(std::ceil(std::pow(static_cast<double>(x), 13.0 / 14.0)));
      bool pos = false, neg = false;
      for (long n = x + 1; n <= x + h; ++n) {
        int s = sgn(data.coeffs[static_cast<size_t>(n)]);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
        if (pos && neg) break;
      }
      if (!pos || !neg) ok = false;
    }
  }

  double elapsed = seconds_since(start);
  if (elapsed >= 60.0) ok = false;
  std::ostringstream d;
  d.setf(std::ios::fixed);
  d.precision(2);
  d << elapsed << "s";
  report(5, "both signs in every (x, x + ceil(x^{13/14})] window, 5 newforms", ok, d.str());
}

void criterion_6() {
  bool ok = true;
  for (const FormData& data : g_forms) {
    std::vector<double> lambda = normalized_from_integers(data.coeffs, data.spec.weight);
    if (!deligne_check(lambda, 100000).empty()) ok = false;
  }
  if (g_forms.empty()) ok = false;
  report(6, "Deligne bound up to 10^5 for all catalog newforms", ok);
}

void criterion_7() {
  bool ok = true;
  const FormData* delta = nullptr;
  for (const FormData& data : g_forms) {
    if (data.spec.label == "12.1") delta = &data;
  }
  if (!delta) {
    report(7, "Rankin-Selberg cross-window slope stability", false, "missing coefficients");
    return;
  }
  std::vector<double> lambda = normalized_from_integers(delta->coeffs, 12);
  auto raw = [&](long x) {
    return rs_partial_sum(lambda, 1, x, SumMode::square_raw).raw_sum;
  };
  auto smoothed = [&](long x) {
    return rs_partial_sum(lambda, 1, x, SumMode::square_log).smoothed_log;
  };
  double slope1 = (raw(40000) - raw(20000)) / 20000.0;
  double slope2 = (raw(80000) - raw(40000)) / 40000.0;
  if (std::fabs(slope1 - slope2) > 0.05 * std::max(std::fabs(slope1), std::fabs(slope2))) {
    ok = false;
  }
  double s1 = smoothed(20000) / 20000.0;
  double s2 = smoothed(40000) / 40000.0;
  if (std::fabs(s1 - s2) > 0.05 * std::max(std::fabs(s1), std::fabs(s2))) ok = false;
  report(7, "Rankin-Selberg cross-window slope stability", ok);
}

void criterion_8() {
  bool ok = true;

  ConvexityStrip geo{0.0, 1.0, 1.0, 4.0, 1.0, 0.0, 0.0};
  if (std::fabs(rademacher_bound(geo, 0.5, 0.0) - 2.0) > 1e-12) ok = false;

  std::mt19937 rng(20260823);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int iter = 0; iter < 100; ++iter) {
    ConvexityStrip s;
    s.a = u(rng) - 1.0;
    s.b = s.a + u(rng);
    s.p = u(rng) - s.a + 0.1;
    s.e_const = u(rng);
    s.f_const = u(rng);
    s.alpha = u(rng);
    s.beta = s.alpha;
    double t = u(rng);
    double modulus_a = std::hypot(s.p + s.a, t);
    double modulus_b = std::hypot(s.p + s.b, t);
    if (std::fabs(rademacher_bound(s, s.a, t) - s.e_const * std::pow(modulus_a, s.alpha)) >
        1e-12 * s.e_const * std::pow(modulus_a, s.alpha)) {
      ok = false;
    }
    if (std::fabs(rademacher_bound(s, s.b, t) - s.f_const * std::pow(modulus_b, s.beta)) >
        1e-12 * s.f_const * std::pow(modulus_b, s.beta)) {
      ok = false;
    }
    auto reduced = [&](double sigma) {
      double modulus = std::hypot(s.p + sigma, t);
      return std::log(rademacher_bound(s, sigma, t)) - s.alpha * std::log(modulus);
    };
    double lo = reduced(s.a), hi = reduced(s.b);
    for (double frac : {0.25, 0.5, 0.75}) {
      double sigma = s.a + frac * (s.b - s.a);
      if (std::fabs(reduced(sigma) - (lo + frac * (hi - lo))) > 1e-10) ok = false;
    }
  }
  report(8, "Rademacher calculator: edges, midpoint, log-affineness", ok);
}

void criterion_9() {
  bool ok = true;
  BoundParams consts;
  if (std::fabs(evaluate_bound("psi1", {{"N", 1}}, consts).value - 1.0) > 1e-12) ok = false;
  if (std::fabs(evaluate_bound("psi1", {{"N", 2}}, consts).value - 15.0) > 1e-12) ok = false;
  double t0 = evaluate_bound("trace_t0_bound", {{"k", 10}, {"N", 1}}, consts).value;
  if (!(t0 > 2.45 && t0 < 2.46)) ok = false;
  for (long k : {10L, 12L}) {
    JacobiExpansion phi = jacobi_cusp_phi(k, 25);
    SiegelExpansion f = maass_lift(phi, 10);
    if (!minimal_nonzero_trace(f).bound_ok) ok = false;
  }
  report(9, "bound evaluators and minimal-trace bound", ok);
}

void criterion_10(const std::string& cli) {
  bool ok = true;
  std::string detail;
  std::vector<std::string> commands = {
      " scan --form lift:phi10 --x 1 --h 1 --format json",
      " scan --form lift:phi10 --x 5 --h 5 --format text",
      " bounds --name psi1 --N 2",
      " bounds --name trace_t0_bound --k 10 --N 1 --format json",
      " count --form lift:phi10 --x 2",
      " count --form lift:phi12 --x 3 --format json",
      " first-change --form lift:phi12 --format json",
      " taylor --form phi12 --format json",
      " taylor --form phi10 --nu 2 --prec 10",
      " rs-sum --form newform:12.1 --x 100 --format csv --prec 100",
      " rs-sum --form newform:2.11 --x 50 --name square_log --format json --prec 50",
      " deligne --form newform:6.3 --x 500 --format json",
      " lift --form phi10 --prec 6",
      " slice --form lift:phi12 --m 2 --prec 8",
  };
  for (const std::string& cmd : commands) {
    RunResult first = run_command(cli + cmd);
    RunResult second = run_command(cli + cmd);
    if (first.exit_code != 0 || second.exit_code != 0) {
      ok = false;
      detail = "nonzero exit:" + cmd;
      break;
    }
    if (first.output != second.output || first.output.empty()) {
      ok = false;
      detail = "output mismatch:" + cmd;
      break;
    }
    if (first.output.back() != '\n') {
      ok = false;
      detail = "missing trailing newline:" + cmd;
      break;
    }
  }
  std::vector<std::string> usage_errors = {
      " scan --x 1",
      " nonsense",
      " bounds",
      " scan --form lift:phi10 --x 1 --h 1 --format yaml",
      " scan --form newform:12.1 --x 1 --h 1",
  };
  for (const std::string& cmd : usage_errors) {
    RunResult r = run_command(cli + cmd);
    if (r.exit_code != 2) {
      ok = false;
      detail = "expected exit 2:" + cmd;
      break;
    }
  }
  report(10, "CLI determinism and usage-error exit codes", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>" << std::endl;
    return 2;
  }
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(argv[1]);
  if (failures > 0) {
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
