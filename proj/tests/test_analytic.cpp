#include <doctest.h>

#include <cmath>
#include <random>

#include "siegelscan/analytic.hpp"

using namespace siegelscan;

TEST_CASE("normalized coefficients") {
  NewformSpec delta = newform_catalog("12.1");
  std::vector<double> lam = normalized_coeffs(delta, 10);
  CHECK(lam[1] == doctest::Approx(1.0));
  CHECK(lam[2] == doctest::Approx(-24.0 / std::pow(2.0, 5.5)));
  CHECK(lam[2] == doctest::Approx(-0.5303).epsilon(1e-3));

  NewformSpec f11 = newform_catalog("2.11");
  std::vector<double> lam11 = normalized_coeffs(f11, 4);
  CHECK(lam11[2] == doctest::Approx(-2.0 / std::sqrt(2.0)));
}

TEST_CASE("deligne check on catalog newforms") {
  for (const auto& label : newform_catalog_labels()) {
    CAPTURE(label);
    CHECK(deligne_check(newform_catalog(label), 2000).empty());
  }
  // tau(6) = 4 dominates |lambda_Delta(6)|
  std::vector<double> lam = normalized_coeffs(newform_catalog("12.1"), 6);
  CHECK(std::fabs(lam[6]) <= 4.0);
  // a manufactured violation is reported
  std::vector<double> bad{0.0, 1.0, 5.0};
  CHECK(deligne_check(bad, 2) == std::vector<long>{2});
}

TEST_CASE("rankin-selberg partial sums") {
  NewformSpec delta = newform_catalog("12.1");
  std::vector<double> lam = normalized_coeffs(delta, 100);

  PartialSumReport raw = rs_partial_sum(lam, 1, 10, SumMode::square_raw);
  double expect = 0.0;
  for (long n = 1; n <= 10; ++n) expect += lam[static_cast<size_t>(n)] * lam[static_cast<size_t>(n)];
  CHECK(raw.raw_sum == doctest::Approx(expect).epsilon(1e-12));
  CHECK(raw.raw_sum > 0.0);
  CHECK(raw.main_term == doctest::Approx(rs_main_term_constant(1) * 10.0));

  PartialSumReport at1 = rs_partial_sum(lam, 1, 1, SumMode::square_log);
  CHECK(at1.smoothed_log == doctest::Approx(0.0));

  PartialSumReport slog = rs_partial_sum(lam, 1, 50, SumMode::square_log);
  PartialSumReport slog2 = rs_partial_sum(lam, 1, 50, SumMode::square_log2);
  CHECK(slog.smoothed_log <= std::log(50.0) * slog.raw_sum);
  double ratio = slog2.smoothed_log2 / slog.smoothed_log;
  CHECK(ratio > 0.0);
  CHECK(ratio < 2.0 * std::log(50.0));

  // square_raw nondecreasing in x
  double prev = 0.0;
  for (long x = 2; x <= 40; ++x) {
    double cur = rs_partial_sum(lam, 1, x, SumMode::square_raw).raw_sum;
    CHECK(cur >= prev - 1e-12);
    prev = cur;
  }

  PartialSumReport lin = rs_partial_sum(lam, 1, 10, SumMode::linear_raw);
  CHECK(lin.main_term == 0.0);
  CHECK_THROWS_AS(sum_mode_from_string("bogus"), std::invalid_argument);
  CHECK(sum_mode_from_string(sum_mode_to_string(SumMode::linear_log)) == SumMode::linear_log);
}

TEST_CASE("main term constant") {
  CHECK(rs_main_term_constant(1) == doctest::Approx(6.0 / (M_PI * M_PI)));
  CHECK(rs_main_term_constant(2) == doctest::Approx(6.0 / (M_PI * M_PI) * 2.0 / 3.0));
  CHECK(rs_main_term_constant(6) == doctest::Approx(0.30396).epsilon(1e-4));
  CHECK_THROWS_AS(rs_main_term_constant(4), std::invalid_argument);
}

TEST_CASE("rademacher bound examples") {
  ConvexityStrip unit{0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0};
  CHECK(rademacher_bound(unit, 0.3, 7.0) == doctest::Approx(1.0));

  ConvexityStrip geo{0.0, 1.0, 1.0, 4.0, 1.0, 0.0, 0.0};
  CHECK(rademacher_bound(geo, 0.5, 0.0) == doctest::Approx(2.0));

  ConvexityStrip sub{0.0, 1.0, 0.5, 1.0, 1.0, 2.0, 0.0};
  CHECK(rademacher_bound(sub, 0.5, 0.0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(rademacher_bound(unit, -0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(rademacher_bound(unit, 1.1, 0.0), std::invalid_argument);
  ConvexityStrip badp{0.0, 1.0, -2.0, 1.0, 1.0, 0.0, 0.0};
  CHECK_THROWS_AS(rademacher_bound(badp, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("rademacher edge consistency and log-affineness") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int iter = 0; iter < 100; ++iter) {
    ConvexityStrip s;
    s.a = u(rng) - 1.0;
    s.b = s.a + u(rng);
    s.p = u(rng) - s.a + 0.1;  // P + a > 0
    s.e_const = u(rng);
    s.f_const = u(rng);
    s.alpha = u(rng);
    s.beta = s.alpha;
    double t = u(rng);

    double modulus_a = std::hypot(s.p + s.a, t);
    double modulus_b = std::hypot(s.p + s.b, t);
    CHECK(rademacher_bound(s, s.a, t) ==
          doctest::Approx(s.e_const * std::pow(modulus_a, s.alpha)).epsilon(1e-12));
    CHECK(rademacher_bound(s, s.b, t) ==
          doctest::Approx(s.f_const * std::pow(modulus_b, s.beta)).epsilon(1e-12));

    // with alpha = beta, log(bound / modulus^alpha) is affine in sigma
    auto reduced = [&](double sigma) {
      double modulus = std::hypot(s.p + sigma, t);
      return std::log(rademacher_bound(s, sigma, t)) - s.alpha * std::log(modulus);
    };
    double lo = reduced(s.a), hi = reduced(s.b);
    for (double frac : {0.25, 0.5, 0.75}) {
      double sigma = s.a + frac * (s.b - s.a);
      CHECK(reduced(sigma) == doctest::Approx(lo + frac * (hi - lo)).epsilon(1e-10));
    }
  }
}

TEST_CASE("bound evaluators") {
  BoundParams consts;
  CHECK(evaluate_bound("psi1", {{"N", 1}}, consts).value == doctest::Approx(1.0));
  CHECK(evaluate_bound("psi1", {{"N", 2}}, consts).value == doctest::Approx(15.0));
  CHECK(evaluate_bound("psi1", {{"N", 6}}, consts).value == doctest::Approx(600.0));

  double t0 = evaluate_bound("trace_t0_bound", {{"k", 10}, {"N", 1}}, consts).value;
  CHECK(t0 > 2.45);
  CHECK(t0 < 2.46);

  double phi = evaluate_bound("phi_ell", {{"ell", 100}, {"N", 6}}, consts).value;
  CHECK(phi == doctest::Approx(std::log(600.0) / std::log(2.0) *
                               std::log(600.0) / std::log(3.0)));
  CHECK(phi == doctest::Approx(53.73).epsilon(1e-3));

  BoundResult psi2 = evaluate_bound("psi2", {{"k", 10}, {"N", 2}}, consts);
  CHECK(psi2.value > 0.0);
  CHECK((psi2.branch == "product" || psi2.branch == "power"));

  CHECK(evaluate_bound("d_const", {{"k", 12}}, consts).value > 0.0);
  CHECK(evaluate_bound("thm1_bound", {{"k", 10}, {"N", 1}}, consts).value > 0.0);
  CHECK(evaluate_bound("thm2_threshold", {{"k", 10}, {"N", 1}}, consts).value > 0.0);
  CHECK(evaluate_bound("nu_bound", {{"N", 11}}, consts).value > 0.0);

  CHECK_THROWS_AS(evaluate_bound("bogus", {}, consts), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_bound("psi1", {}, consts), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_bound("psi1", {{"N", 4}}, consts), std::invalid_argument);

  BoundParams tweaked;
  tweaked.set("c7", 2.0);
  CHECK(tweaked.c7 == 2.0);
  CHECK_THROWS_AS(tweaked.set("nope", 1.0), std::invalid_argument);
  CHECK_THROWS_AS(tweaked.set("eps", -1.0), std::invalid_argument);
}

TEST_CASE("zeta_N Euler factor") {
  ZetaFactorResult z1 = zeta_n_factor(1, 2.0, 1000000);
  CHECK(z1.value == doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-4));
  ZetaFactorResult z2 = zeta_n_factor(2, 2.0, 1000000);
  CHECK(z2.value == doctest::Approx(M_PI * M_PI / 6.0 * 0.75).epsilon(1e-4));
  CHECK(zeta_n_factor(5, 2.0, 0).value == doctest::Approx(1.0));
  CHECK(z1.tail_bound > 0.0);
  CHECK_THROWS_AS(zeta_n_factor(1, 1.0, 100), std::invalid_argument);
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(13) == std::vector<long>{2, 3, 5, 7, 11, 13});
}
