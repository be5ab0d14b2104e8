#include <algorithm>

#include "test_util.hpp"

using namespace sincpow;

TEST_CASE("tail bound spot values and shape", "[bounds]") {
  CHECK(abs(tail_bound(6) - tu::dec("0.36787944117144232159552377016146")) <=
        tu::tol(1e-30));
  for (unsigned long n = 1; n < 20; ++n)
    CHECK(tail_bound(n + 1) < tail_bound(n));
  CHECK_THROWS_AS(tail_bound(0), std::invalid_argument);
}

TEST_CASE("tail integral sits under the exponential bound", "[bounds]") {
  for (unsigned long n = 3; n <= 20; ++n) {
    QuadResult q = quad_sinc_pow_from(n, Rational(1), tu::tol(1e-15), 160);
    INFO("n = " << n);
    CHECK(q.value > BigFloat(64));
    CHECK(q.value + q.certified_error <= tail_bound(n, 160));
  }
}

TEST_CASE("coefficient bound holds from k = 3 with a single violation at k = 2",
          "[bounds]") {
  CoeffBoundCheck r = coeff_bound_check(60);
  REQUIRE(r.violations == std::vector<int>{2});
  CHECK_FALSE(r.holds_everywhere());
  CHECK_FALSE(r.holds_from(2));
  CHECK(r.holds_from(3));
  CHECK(r.first_violation() == 2);

  // the k = 2 and k = 4 comparisons redone longhand in the rationals
  SeriesCoeffs a = series_log_sinc(4);
  CHECK(abs(a.at(2)) >= reference::coeff_bound_constant() * parse_rational("1/9"));
  CHECK(abs(a.at(4)) < reference::coeff_bound_constant() * parse_rational("1/81"));

  CHECK_THROWS_AS(coeff_bound_check(1), std::invalid_argument);
}

TEST_CASE("taylor remainder bound spot values", "[bounds]") {
  BigFloat one = BigFloat::of_int(1, 128);
  CHECK(abs(remainder_bound(one, 2) -
            BigFloat::from_rational(parse_rational("109/8100"), 128)) <=
        tu::tol(1e-35));
  BigFloat x15 = BigFloat::of(1.5, 128);
  CHECK(abs(remainder_bound(x15, 10) -
            BigFloat::from_rational(parse_rational("109/409600"), 128)) <=
        tu::tol(1e-35));

  CHECK_THROWS_AS(remainder_bound(one, 3), std::invalid_argument);
  CHECK_THROWS_AS(remainder_bound(one, 0), std::invalid_argument);
  CHECK_THROWS_AS(remainder_bound(BigFloat::of_int(0, 128), 2), std::invalid_argument);
  CHECK_THROWS_AS(remainder_bound(BigFloat::of_int(-1, 128), 2), std::invalid_argument);
  CHECK_THROWS_AS(remainder_bound(BigFloat::of_int(2, 128), 2), std::invalid_argument);
}

TEST_CASE("taylor remainder bound dominates the actual remainder", "[bounds]") {
  mpfr_prec_t wp = 192;
  SeriesCoeffs a = series_log_sinc(12);
  for (int K : {2, 4, 6, 8, 10}) {
    for (int i = 1; i <= 20; ++i) {
      // grid over (0, 1.57], safely inside the admissible interval
      Rational xq = make_rational(Int(157) * i, Int(2000));
      BigFloat x = BigFloat::from_rational(xq, wp);
      BigFloat partial(wp);
      for (int k = K; k >= 0; --k)
        partial = partial * x + BigFloat::from_rational(a.at(k), wp);
      BigFloat actual = abs(log(sin(x) / x) - partial);
      INFO("K = " << K << ", i = " << i);
      CHECK(leq_with_margin(actual, remainder_bound(x, K)));
    }
  }
}

TEST_CASE("pointwise upper bound holds on a dense grid", "[bounds]") {
  CHECK(pointwise_bound_violations(1000).empty());
  CHECK_THROWS_AS(pointwise_bound_violations(0), std::invalid_argument);
}

TEST_CASE("gaussian tail bound formula and domination", "[bounds]") {
  BigFloat u0 = BigFloat::of_int(6, 160);
  BigFloat b = gaussian_tail_bound(u0, 20, 160);

  mpfr_prec_t wp = 192;
  BigFloat expected = exp(BigFloat::of_int(-18, wp)) * pow_si(BigFloat::of_int(6, wp), 20) /
                      (BigFloat::of_int(1, wp) -
                       exp(BigFloat::from_rational(parse_rational("-3/2"), wp)));
  CHECK(abs(b - expected) <= tu::tol(1e-30) * expected);

  // numeric integral over [6, 46]; past 46 the integrand is below e^-900
  auto rule = gauss_legendre_rule(48, wp);
  auto f = [wp](const BigFloat& u) {
    return exp(-(u * u) * ldexp2(BigFloat::of_int(1, wp), -1)) * pow_si(u, 20);
  };
  BigFloat sum(wp), err(wp);
  long pieces = 0;
  for (int blk = 3; blk < 23; ++blk)
    integrate_adaptive(*rule, f, BigFloat::of_int(2 * blk, wp),
                       BigFloat::of_int(2 * (blk + 1), wp), tu::tol(1e-3), 0, sum, err,
                       pieces);
  CHECK(sum + err <= b);
  CHECK(sum > ldexp2(b, -4));  // the bound is not wildly loose either

  CHECK_THROWS_AS(gaussian_tail_bound(BigFloat::of_int(5, 64), 2), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_tail_bound(BigFloat::of_int(4, 64), 2), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_tail_bound(u0, 21), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_tail_bound(u0, -1), std::invalid_argument);
}

TEST_CASE("error budget at the threshold", "[bounds]") {
  ErrorBudget b = error_budget(400);
  CHECK(b.residual_within_envelope);
  CHECK(b.extension_below_taylor);
  CHECK(b.total > tu::tol(1.3e-21));
  CHECK(b.total < tu::tol(1.32e-21));
  CHECK(b.taylor_tail > BigFloat(64));
  CHECK(b.extension_tail > BigFloat(64));
  CHECK(b.residual_terms > BigFloat(64));
  CHECK_THROWS_AS(error_budget(399), std::invalid_argument);
}

TEST_CASE("error budget shrinks monotonically past the threshold", "[bounds]") {
  BigFloat prev = error_budget(400).total;
  for (unsigned long n = 500; n <= 2000; n += 100) {
    ErrorBudget b = error_budget(n);
    INFO("n = " << n);
    CHECK(b.total < prev);
    CHECK(b.residual_within_envelope);
    CHECK(b.extension_below_taylor);
    prev = b.total;
  }
}

TEST_CASE("envelope scan over small n flags the known exceptions and more",
          "[bounds]") {
  EnvelopeReport rep = prop2_envelope(1, 30, 128);

  std::vector<unsigned long> flagged_n;
  for (const auto& e : rep.flagged) flagged_n.push_back(e.n);
  CHECK(flagged_n ==
        std::vector<unsigned long>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12});

  std::vector<unsigned long> excl_n;
  for (const auto& e : rep.published_excluded) excl_n.push_back(e.n);
  CHECK(excl_n == std::vector<unsigned long>{2, 4, 6, 8, 10});

  CHECK_FALSE(rep.flagged_matches_published());
  CHECK(rep.flagged_outside_published() ==
        std::vector<unsigned long>{1, 3, 5, 7, 9, 12});

  CHECK(rep.max_residual_n == 2);
  CHECK(abs(rep.max_residual - tu::dec("3.17878064861")) <= tu::tol(1e-5));
  for (const auto& e : rep.flagged) {
    if (e.n == 1)
      CHECK(abs(e.residual - tu::dec("0.136619676854")) <= tu::tol(2e-6));
    if (e.n == 12)
      CHECK(abs(e.residual - tu::dec("0.00904522280502")) <= tu::tol(2e-6));
  }

  AsymptoticExpansion ex = asymptotic_coefficients(4);
  CHECK(abs(envelope_residual(11, ex, 128) - tu::dec("0.0034220382896")) <=
        tu::tol(2e-6));
}

TEST_CASE("envelope scan is clean away from small n", "[bounds]") {
  EnvelopeReport rep = prop2_envelope(13, 40, 128);
  CHECK(rep.flagged.empty());
  CHECK(rep.flagged_matches_published());
  // the residual climbs back toward its limit, so the range maximum sits at 40
  CHECK(rep.max_unflagged_n == 40);
  CHECK(abs(rep.max_unflagged_residual - tu::dec("0.00691208803332")) <= tu::tol(2e-6));
  CHECK(rep.max_unflagged_residual <
        BigFloat::from_rational(reference::envelope_constant(), 128));

  AsymptoticExpansion ex = asymptotic_coefficients(4);
  CHECK(abs(envelope_residual(13, ex, 128) - tu::dec("0.00504677718478")) <=
        tu::tol(2e-6));
}

TEST_CASE("envelope scan is deterministic across thread counts", "[bounds]") {
  EnvelopeReport a = prop2_envelope(1, 30, 128, 1);
  EnvelopeReport b = prop2_envelope(1, 30, 128, 4);
  REQUIRE(a.flagged.size() == b.flagged.size());
  for (std::size_t i = 0; i < a.flagged.size(); ++i) {
    CHECK(a.flagged[i].n == b.flagged[i].n);
    CHECK(a.flagged[i].residual == b.flagged[i].residual);
  }
  CHECK(a.max_residual == b.max_residual);

  CHECK_THROWS_AS(prop2_envelope(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(prop2_envelope(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(prop2_envelope(1, 5, 128, 0), std::invalid_argument);
}

TEST_CASE("fibonacci counting identity", "[bounds]") {
  CHECK(fibonacci_identity_check(300).violations.empty());
  // k = 5 longhand: C(2,1) + C(3,0) = 3 = F_4
  Int s = binomial(2, 1) + binomial(3, 0);
  CHECK(s == fibonacci(4));
  CHECK_THROWS_AS(fibonacci_identity_check(1), std::invalid_argument);
}

TEST_CASE("margin comparison behaves at the boundary", "[bounds]") {
  BigFloat one = BigFloat::of_int(1, 128);
  BigFloat just_below = one - ldexp2(one, -100);
  CHECK_FALSE(leq_with_margin(one, just_below));
  CHECK(leq_with_margin(round_to(one, 64), round_to(just_below, 64)));
  CHECK(leq_with_margin(one, one));
  CHECK(leq_with_margin(just_below, one));
}
