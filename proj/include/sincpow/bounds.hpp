#pragma once

#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "asymptotic.hpp"
#include "bigfloat.hpp"
#include "exact_integral.hpp"
#include "quadrature.hpp"
#include "reference.hpp"
#include "series.hpp"

namespace sincpow {

// a <= b up to two units in the last place of the coarser operand. Used when
// a claimed inequality is certified in floating point: a genuine failure
// clears this margin by many orders of magnitude.
inline bool leq_with_margin(const BigFloat& a, const BigFloat& b) {
  mpfr_prec_t p = std::min(a.prec(), b.prec());
  BigFloat m = ldexp2(max(abs(a), abs(b)), -static_cast<long>(p) + 2);
  return a <= b + m;
}

// Upper bound e^(-n/6) for integral_1^inf (sin x / x)^n dx.
inline BigFloat tail_bound(unsigned long n, mpfr_prec_t prec = 128) {
  if (n == 0) throw std::invalid_argument("tail_bound: n must be >= 1");
  BigFloat e = BigFloat::from_rational(make_rational(Int(n), Int(6)), prec + 16);
  return round_to(exp(-e), prec);
}

// |a_k| < 0.517 * 3^-k checked exactly in the rationals for 1 <= k <= k_max.
struct CoeffBoundCheck {
  int k_max;
  std::vector<int> violations;

  bool holds_everywhere() const { return violations.empty(); }
  bool holds_from(int k0) const {
    for (int k : violations)
      if (k >= k0) return false;
    return true;
  }
  std::optional<int> first_violation() const {
    if (violations.empty()) return std::nullopt;
    return violations.front();
  }
};

inline CoeffBoundCheck coeff_bound_check(int k_max) {
  if (k_max < 2) throw std::invalid_argument("coeff_bound_check: k_max must be >= 2");
  int degree = k_max + (k_max % 2);
  SeriesCoeffs s = series_log_sinc(degree);
  const Rational& c = reference::coeff_bound_constant();
  CoeffBoundCheck r{k_max, {}};
  for (int k = 1; k <= k_max; ++k) {
    Rational lhs = abs(s.at(k));
    Rational rhs = c * make_rational(Int(1), pow_int(Int(3), k));
    if (!(lhs < rhs)) r.violations.push_back(k);
  }
  return r;
}

// 1.09 (x/3)^(K+2): bound for the log(sin x / x) Taylor remainder after the
// degree-K partial sum, valid for 0 < x <= pi/2 and K even.
inline BigFloat remainder_bound(const BigFloat& x, int K) {
  if (K < 2 || K % 2 != 0)
    throw std::invalid_argument("remainder_bound: K must be even and >= 2");
  mpfr_prec_t wp = x.prec() + 16;
  BigFloat half_pi = ldexp2(BigFloat::pi(wp), -1);
  BigFloat xw = round_to(x, wp);
  // slack admits pi/2 itself when the caller rounded it at its own precision
  BigFloat slack = ldexp2(half_pi, -static_cast<long>(x.prec()) + 2);
  if (!(xw > BigFloat(wp)) || xw > half_pi + slack)
    throw std::invalid_argument("remainder_bound: x must lie in (0, pi/2]");
  BigFloat t = pow_si(xw / 3ul, K + 2) * reference::remainder_constant();
  return round_to(t, x.prec());
}

// log(sin x / x) <= -x^2/6 sampled on (0, 1]. Returns indices (1-based) of
// sample points where the inequality fails beyond the float margin.
inline std::vector<int> pointwise_bound_violations(int samples, mpfr_prec_t prec = 128) {
  if (samples < 1) throw std::invalid_argument("pointwise_bound_violations: samples >= 1");
  mpfr_prec_t wp = prec + 16;
  std::vector<int> bad;
  for (int i = 1; i <= samples; ++i) {
    BigFloat x = BigFloat::of_int(i, wp) / static_cast<unsigned long>(samples);
    BigFloat lhs = log(sin(x) / x);
    BigFloat rhs = -(x * x) / 6ul;
    if (!leq_with_margin(lhs, rhs)) bad.push_back(i);
  }
  return bad;
}

// e^(-u0^2/2) u0^k / (1 - e^(-3/2)) bounds integral_u0^inf e^(-u^2/2) u^k du.
// The unit-step comparison behind it needs u0 > 5 and k <= 20.
inline BigFloat gaussian_tail_bound(const BigFloat& u0, int k, mpfr_prec_t prec = 128) {
  if (k < 0 || k > 20)
    throw std::invalid_argument("gaussian_tail_bound: k out of [0,20]");
  mpfr_prec_t wp = std::max<mpfr_prec_t>(u0.prec(), prec) + 16;
  BigFloat u = round_to(u0, wp);
  if (!(u > BigFloat::of_int(5, wp)))
    throw std::invalid_argument("gaussian_tail_bound: u0 must exceed 5");
  BigFloat num = exp(-(u * u) * ldexp2(BigFloat::of_int(1, wp), -1));
  if (k > 0) num *= pow_si(u, k);
  BigFloat den = BigFloat::of_int(1, wp) -
                 exp(BigFloat::from_rational(make_rational(-3, 2), wp));
  return round_to(num / den, prec);
}

// Composite error bound for the direct large-n evaluation, valid for n >= 400:
//   taylor_tail     = 11104 n^-23/2
//   extension_tail  = 1.59e-9 n^5 e^(-pi n/12)
//   residual_terms  = e^-n/6 + 1.45 * 0.479^35 (35/n)^35/2 + 5.5e7 n^-11
// together with the two published comparisons on the pieces.
struct ErrorBudget {
  unsigned long n;
  BigFloat taylor_tail, extension_tail, residual_terms, total;
  bool residual_within_envelope;  // residual_terms <= 1e-5 / n^5
  bool extension_below_taylor;    // extension_tail < n^-23/2
};

inline ErrorBudget error_budget(unsigned long n, mpfr_prec_t prec = 192) {
  if (n < 400) throw std::invalid_argument("error_budget: bound established for n >= 400");
  mpfr_prec_t wp = prec + 32;
  BigFloat nb = BigFloat::of_uint(n, wp);
  BigFloat n_m232 = sqrt(pow_si(nb, -23));

  BigFloat t1 = n_m232 * reference::taylor_tail_constant();
  BigFloat t2 = pow_si(nb, 5) *
                exp(-(BigFloat::pi(wp) * n) / 12ul) *
                reference::extension_tail_constant();
  BigFloat t3 = exp(-(nb / 6ul));
  Rational pre = reference::residual_prefactor() *
                 pow_rational(reference::residual_base(), reference::residual_power);
  t3 += sqrt(BigFloat::from_rational(
            pow_rational(make_rational(Int(35), Int(n)), reference::residual_power), wp)) *
        pre;
  t3 += pow_si(nb, -11) * reference::residual_poly_constant();

  Rational env = reference::residual_envelope() *
                 make_rational(Int(1), pow_int(Int(n), 5));
  ErrorBudget b{n,
                round_to(t1, prec),
                round_to(t2, prec),
                round_to(t3, prec),
                round_to(t1 + t2 + t3, prec),
                leq_with_margin(t3, BigFloat::from_rational(env, wp)),
                t2 < n_m232};
  return b;
}

// Residual n^5 |I(n)/sqrt(3 pi/(2n)) - S_4(n)| against the published envelope
// constant. The inner ratio is formed exactly: I(n)/sqrt(3 pi/(2n)) =
// sqrt(pi * 2n r(n)^2 / 3), so only the square root and the final subtraction
// round.
struct EnvelopeEntry {
  unsigned long n;
  BigFloat residual;
};

struct EnvelopeReport {
  unsigned long n_lo, n_hi;
  mpfr_prec_t precision;
  std::vector<EnvelopeEntry> flagged;            // residual above the constant
  std::vector<EnvelopeEntry> published_excluded; // the published exception n
  BigFloat max_residual;
  unsigned long max_residual_n;
  BigFloat max_unflagged_residual;
  unsigned long max_unflagged_n;

  bool flagged_matches_published() const {
    const auto& ex = reference::envelope_exclusions();
    std::size_t expect = 0;
    for (unsigned long n : ex)
      if (n >= n_lo && n <= n_hi) ++expect;
    if (flagged.size() != expect) return false;
    for (const auto& e : flagged)
      if (ex.count(e.n) == 0) return false;
    return true;
  }
  std::vector<unsigned long> flagged_outside_published() const {
    std::vector<unsigned long> out;
    for (const auto& e : flagged)
      if (reference::envelope_exclusions().count(e.n) == 0) out.push_back(e.n);
    return out;
  }
};

inline BigFloat envelope_residual(unsigned long n, const AsymptoticExpansion& ex,
                                  mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 32;
  Rational r = exact_sinc_integral(n).r;
  Rational rho = r * r * make_rational(Int(2) * Int(n), Int(3));
  BigFloat ratio = sqrt(BigFloat::pi(wp) * rho);
  BigFloat s = BigFloat::from_rational(expansion_partial_sum(ex, n), wp);
  BigFloat resid = abs(ratio - s) * make_rational(pow_int(Int(n), 5), Int(1));
  return round_to(resid, prec);
}

inline EnvelopeReport prop2_envelope(unsigned long n_lo, unsigned long n_hi,
                                     mpfr_prec_t prec = 128, int threads = 1) {
  if (n_lo == 0 || n_hi < n_lo)
    throw std::invalid_argument("prop2_envelope: need 1 <= n_lo <= n_hi");
  if (threads < 1) throw std::invalid_argument("prop2_envelope: threads must be >= 1");
  AsymptoticExpansion ex = asymptotic_coefficients(4);
  std::size_t count = n_hi - n_lo + 1;
  std::vector<BigFloat> resid(count, BigFloat(prec));

  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      resid[i] = envelope_residual(n_lo + i, ex, prec);
  };
  if (threads == 1 || count < 8) {
    work(0, count);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  BigFloat cutoff = BigFloat::from_rational(reference::envelope_constant(), prec + 16);
  EnvelopeReport rep{n_lo, n_hi, prec, {}, {}, BigFloat(prec), 0, BigFloat(prec), 0};
  for (std::size_t i = 0; i < count; ++i) {
    unsigned long n = n_lo + i;
    bool flag = resid[i] > cutoff;
    if (flag) rep.flagged.push_back({n, resid[i]});
    if (reference::envelope_exclusions().count(n) != 0)
      rep.published_excluded.push_back({n, resid[i]});
    if (rep.max_residual_n == 0 || resid[i] > rep.max_residual) {
      rep.max_residual = resid[i];
      rep.max_residual_n = n;
    }
    if (!flag && (rep.max_unflagged_n == 0 || resid[i] > rep.max_unflagged_residual)) {
      rep.max_unflagged_residual = resid[i];
      rep.max_unflagged_n = n;
    }
  }
  return rep;
}

// sum_{ceil(k/2) <= l <= k-1} C(l-1, k-l-1) = F_{k-1} (Fibonacci), the
// counting identity behind the composition estimates. Checked exactly.
struct IdentityCheck {
  int k_max;
  std::vector<int> violations;
};

inline IdentityCheck fibonacci_identity_check(int k_max) {
  if (k_max < 2) throw std::invalid_argument("fibonacci_identity_check: k_max >= 2");
  IdentityCheck r{k_max, {}};
  for (int k = 2; k <= k_max; ++k) {
    Int sum(0);
    for (int l = (k + 1) / 2; l <= k - 1; ++l) sum += binomial(l - 1, k - l - 1);
    if (sum != fibonacci(k - 1)) r.violations.push_back(k);
  }
  return r;
}

}  // namespace sincpow
