#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigfloat.hpp"
#include "exact_integral.hpp"
#include "rational.hpp"

namespace sincpow {

struct QuadResult {
  BigFloat value;
  BigFloat certified_error;  // rigorous bound: |value - integral| <= this
  long pieces;               // accepted panels
};

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes/weights on [-1,1], cached per (points, precision).

struct GaussLegendreRule {
  mpfr_prec_t prec;
  std::vector<BigFloat> nodes, weights;
};

namespace detail {

inline void legendre_eval(int k, const BigFloat& x, BigFloat& pk, BigFloat& pk1) {
  mpfr_prec_t wp = x.prec();
  BigFloat p0 = BigFloat::of_int(1, wp), p1 = x;
  for (int j = 2; j <= k; ++j) {
    BigFloat p2 = (x * p1 * static_cast<unsigned long>(2 * j - 1) -
                   p0 * static_cast<unsigned long>(j - 1)) /
                  static_cast<unsigned long>(j);
    p0 = p1;
    p1 = p2;
  }
  pk = p1;
  pk1 = p0;
}

inline std::shared_ptr<const GaussLegendreRule> build_gl_rule(int k, mpfr_prec_t prec) {
  auto rule = std::make_shared<GaussLegendreRule>();
  rule->prec = prec;
  mpfr_prec_t wp = prec + 32;
  BigFloat one = BigFloat::of_int(1, wp);
  BigFloat step_tol = ldexp2(one, -(prec + 8));
  for (int i = 1; i <= k; ++i) {
    // Chebyshev-angle seed, then Newton on the three-term recurrence.
    double seed = std::cos(3.14159265358979323846 * (i - 0.25) / (k + 0.5));
    BigFloat x = BigFloat::of(seed, wp);
    BigFloat pk(wp), pk1(wp);
    for (int it = 0; it < 200; ++it) {
      legendre_eval(k, x, pk, pk1);
      BigFloat dp = (x * pk - pk1) * static_cast<unsigned long>(k) / (x * x - one);
      BigFloat dx = pk / dp;
      x -= dx;
      if (abs(dx) < step_tol) break;
    }
    legendre_eval(k, x, pk, pk1);
    BigFloat dp = (x * pk - pk1) * static_cast<unsigned long>(k) / (x * x - one);
    BigFloat w = BigFloat::of_int(2, wp) / ((one - x * x) * dp * dp);
    rule->nodes.push_back(round_to(x, prec));
    rule->weights.push_back(round_to(w, prec));
  }
  return rule;
}

}  // namespace detail

inline std::shared_ptr<const GaussLegendreRule> gauss_legendre_rule(int points,
                                                                    mpfr_prec_t prec) {
  if (points < 2 || points > 256)
    throw std::invalid_argument("gauss_legendre_rule: points out of range");
  static std::mutex m;
  static std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const GaussLegendreRule>>
      cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_pair(points, prec);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rule = detail::build_gl_rule(points, prec);
  cache.emplace(key, rule);
  return rule;
}

// One Gauss-Legendre pass over [a,b]; abs_accum collects sum |w f| * jac for
// the rounding-slack estimate.
template <typename F>
BigFloat gl_apply(const GaussLegendreRule& rule, const F& f, const BigFloat& a,
                  const BigFloat& b, BigFloat* abs_accum = nullptr) {
  mpfr_prec_t wp = std::max(a.prec(), b.prec());
  BigFloat half = ldexp2(BigFloat::of_int(1, wp), -1);
  BigFloat mid = (a + b) * half, rad = (b - a) * half;
  BigFloat acc(wp);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    BigFloat t = rule.weights[i] * f(mid + rad * rule.nodes[i]);
    acc += t;
    if (abs_accum) *abs_accum += abs(t) * rad;
  }
  return acc * rad;
}

// Adaptive bisection: a panel is accepted when the whole-panel estimate and
// the sum of its two halves agree to `tol`; the halved value is kept and the
// disagreement is charged to the certified error.
template <typename F>
void integrate_adaptive(const GaussLegendreRule& rule, const F& f, const BigFloat& a,
                        const BigFloat& b, const BigFloat& tol, int depth,
                        BigFloat& sum, BigFloat& err, long& pieces,
                        BigFloat* abs_accum = nullptr) {
  if (depth > 60) throw std::runtime_error("integrate_adaptive: bisection depth exceeded");
  BigFloat whole = gl_apply(rule, f, a, b, nullptr);
  BigFloat half = ldexp2(BigFloat::of_int(1, a.prec()), -1);
  BigFloat mid = (a + b) * half;
  BigFloat left = gl_apply(rule, f, a, mid, abs_accum);
  BigFloat right = gl_apply(rule, f, mid, b, abs_accum);
  BigFloat diff = abs(whole - (left + right));
  if (diff <= tol) {
    sum += left + right;
    err += diff;
    ++pieces;
    return;
  }
  BigFloat tol_half = ldexp2(tol, -1);
  integrate_adaptive(rule, f, a, mid, tol_half, depth + 1, sum, err, pieces, abs_accum);
  integrate_adaptive(rule, f, mid, b, tol_half, depth + 1, sum, err, pieces, abs_accum);
}

// ---------------------------------------------------------------------------
// Oscillatory tail integral_T^inf trig(w x) x^-s dx by repeated integration
// by parts. Each stage peels one boundary term; the untouched rest is bounded
// through integral_T^inf x^-s dx, which stays valid at every truncation point.

namespace detail {

enum class Trig { cos_kind, sin_kind };

struct OscTail {
  BigFloat value, remainder;
};

inline OscTail osc_tail(Trig kind, unsigned long omega, unsigned long s0,
                        const BigFloat& T, const BigFloat& tol) {
  mpfr_prec_t wp = T.prec();
  BigFloat wT = T * omega;
  BigFloat sinT = sin(wT), cosT = cos(wT);
  BigFloat inv_t = BigFloat::of_int(1, wp) / T;
  BigFloat tpow = pow_si(T, -static_cast<long>(s0));
  BigFloat factor = BigFloat::of_int(1, wp);
  BigFloat value(wp);
  BigFloat prev_pending(wp);
  unsigned long s = s0;
  for (int p = 0;; ++p) {
    BigFloat pending = abs(factor) * tpow * T / (s - 1);
    if (pending <= tol || (p > 0 && pending >= prev_pending))
      return OscTail{value, pending};
    BigFloat boundary =
        (kind == Trig::cos_kind ? -sinT : cosT) * tpow / omega;
    value += factor * boundary;
    factor = factor * BigFloat::of_uint(s, wp) / omega;
    if (kind == Trig::sin_kind) factor = -factor;
    kind = kind == Trig::cos_kind ? Trig::sin_kind : Trig::cos_kind;
    ++s;
    tpow *= inv_t;
    prev_pending = pending;
  }
}

// Power reduction of sin^n t: a constant part (n even) plus cosines/sines of
// the frequencies n - 2j with exact rational coefficients.
struct SinPowerTerm {
  Rational coef;
  unsigned long omega;
};

struct SinPowerForm {
  Rational constant;  // zero for odd n
  Trig kind;
  std::vector<SinPowerTerm> terms;
};

inline SinPowerForm sin_power_form(unsigned long n) {
  SinPowerForm f;
  Rational two_scaled = make_rational(Int(2), pow2(n));
  if (n % 2 == 0) {
    f.kind = Trig::cos_kind;
    f.constant = make_rational(binomial(static_cast<long>(n), static_cast<long>(n / 2)),
                               pow2(n));
    for (unsigned long j = 0; j < n / 2; ++j) {
      Rational c = two_scaled *
                   Rational(binomial(static_cast<long>(n), static_cast<long>(j)));
      if ((n / 2 - j) % 2 != 0) c = -c;
      f.terms.push_back({c, n - 2 * j});
    }
  } else {
    f.kind = Trig::sin_kind;
    for (unsigned long j = 0; j <= (n - 1) / 2; ++j) {
      Rational c = two_scaled *
                   Rational(binomial(static_cast<long>(n), static_cast<long>(j)));
      if (((n - 1) / 2 - j) % 2 != 0) c = -c;
      f.terms.push_back({c, n - 2 * j});
    }
  }
  return f;
}

}  // namespace detail

// (sin x / x)^n at a point; the limit value 1 at x = 0.
inline BigFloat sinc_pow(const BigFloat& x, unsigned long n) {
  if (x.is_zero()) return BigFloat::of_int(1, x.prec());
  BigFloat s = sin(x) / x;
  BigFloat r(x.prec());
  mpfr_pow_ui(r.raw(), s.raw(), n, MPFR_RNDN);
  return r;
}

// integral_a^inf (sin x / x)^n dx with a certified error bound. The head
// [a, T], T = max(64, 2n) pi, is integrated per sign lobe of sin^n; the tail
// uses the closed trigonometric form of sin^n and the integration-by-parts
// ladder above. n = 1 is only admitted for a = 0 (the integral is pi/2; for
// a > 0 it is not absolutely convergent and the tail bound would not close).
inline QuadResult quad_sinc_pow_from(unsigned long n, const Rational& a,
                                     const BigFloat& target_err,
                                     mpfr_prec_t prec = 256) {
  if (n == 0) throw std::invalid_argument("quad_sinc_pow_from: n must be >= 1");
  if (a < 0) throw std::invalid_argument("quad_sinc_pow_from: lower limit must be >= 0");
  if (target_err.sign() <= 0)
    throw std::invalid_argument("quad_sinc_pow_from: target error must be positive");
  if (n == 1) {
    if (a != 0)
      throw std::invalid_argument("quad_sinc_pow_from: n = 1 needs lower limit 0");
    BigFloat v = ldexp2(BigFloat::pi(prec), -1);
    BigFloat cert = ldexp2(abs(v), -static_cast<long>(prec) + 2);
    return QuadResult{v, cert, 0};
  }

  mpfr_prec_t wp = prec + 32;
  unsigned long blocks = std::max<unsigned long>(64, 2 * n);
  BigFloat pi_w = BigFloat::pi(wp);
  BigFloat T = pi_w * blocks;
  BigFloat a_w = BigFloat::from_rational(a, wp);
  if (!(a_w < T))
    throw std::invalid_argument("quad_sinc_pow_from: lower limit beyond tail cutoff");

  BigFloat half_target = ldexp2(target_err, -1);
  auto rule = gauss_legendre_rule(48, wp);
  auto f = [n](const BigFloat& x) { return sinc_pow(x, n); };

  BigFloat sum(wp), head_err(wp), absint(wp);
  long pieces = 0;
  BigFloat block_tol = half_target / blocks;
  unsigned long first_block = 0;
  {
    // first sign-lobe boundary at or after a
    BigFloat q = a_w / pi_w;
    first_block = static_cast<unsigned long>(mpfr_get_ui(q.raw(), MPFR_RNDD));
  }
  for (unsigned long b = first_block; b < blocks; ++b) {
    BigFloat lo = pi_w * b;
    if (b == first_block) lo = a_w;
    BigFloat hi = pi_w * (b + 1);
    integrate_adaptive(*rule, f, lo, hi, block_tol, 0, sum, head_err, pieces, &absint);
  }

  detail::SinPowerForm form = detail::sin_power_form(n);
  BigFloat coef_mass(wp);
  for (const auto& t : form.terms)
    coef_mass += abs(BigFloat::from_rational(t.coef, wp));
  BigFloat term_tol = half_target / coef_mass;
  BigFloat tail_err(wp);
  for (const auto& t : form.terms) {
    detail::OscTail ot = detail::osc_tail(form.kind, t.omega, n, T, term_tol);
    BigFloat c = BigFloat::from_rational(t.coef, wp);
    sum += c * ot.value;
    tail_err += abs(c) * ot.remainder;
  }
  if (form.constant != 0)
    sum += BigFloat::from_rational(form.constant, wp) * pow_si(T, 1 - static_cast<long>(n)) /
           (n - 1);

  // one-ulp-per-operation slack for the floating point work itself
  BigFloat slack = ldexp2(absint + abs(sum) + BigFloat::of_int(1, wp), -(wp - 24));
  BigFloat cert = head_err + tail_err + slack;
  if (cert > target_err)
    throw std::runtime_error(
        "quad_sinc_pow_from: certified error exceeds requested target; "
        "raise the precision or relax the target");
  return QuadResult{round_to(sum, prec), round_to(cert, prec), pieces};
}

inline QuadResult quad_sinc_pow(unsigned long n, const BigFloat& target_err,
                                mpfr_prec_t prec = 256) {
  return quad_sinc_pow_from(n, Rational(0), target_err, prec);
}

// integral_0^inf e^(-u^2/2) u^(2k) du, k <= 20. The range [0, 40] is done by
// panels; past u = 40 the recursion
//   G(m) = U^(m-1) e^(-U^2/2) + (m-1) G(m-2),  G(0) <= e^(-U^2/2)/U
// bounds the rest below 10^-300, far under one ulp at any supported precision.
inline BigFloat gaussian_moment(int k, mpfr_prec_t prec = 192) {
  if (k < 0 || k > 20) throw std::invalid_argument("gaussian_moment: k out of [0,20]");
  if (prec < 64) throw std::invalid_argument("gaussian_moment: precision must be >= 64");
  mpfr_prec_t wp = prec + 32;
  auto rule = gauss_legendre_rule(48, wp);
  auto f = [k, wp](const BigFloat& u) {
    BigFloat e = exp(-(u * u) * ldexp2(BigFloat::of_int(1, wp), -1));
    return k == 0 ? e : e * pow_si(u, 2 * k);
  };
  BigFloat scale = BigFloat::from_rational(
      make_rational(double_factorial(2 * k - 1) * 2, Int(1)), wp);
  BigFloat tol = ldexp2(scale, -(prec + 8)) / 20;
  BigFloat sum(wp), err(wp);
  long pieces = 0;
  for (int b = 0; b < 20; ++b) {
    integrate_adaptive(*rule, f, BigFloat::of_int(2 * b, wp),
                       BigFloat::of_int(2 * (b + 1), wp), tol, 0, sum, err, pieces);
  }
  return round_to(sum, prec);
}

// Angular integral of |log(sin z / z)| around the circle |z| = r:
//   M(r) = integral_0^2pi |log(sin(r e^(i t)) / (r e^(i t)))| dt,
// with the argument of the log tracked continuously from t = 0 (sin z / z is
// nonvanishing on the disk for r < pi, so the branch is well defined).
// Periodic trapezoid sums with doubling N until two successive levels agree.
// M(3) / (6 pi) recovers the constant of the published coefficient bound.
inline BigFloat contour_mean(const BigFloat& r, mpfr_prec_t prec = 128) {
  mpfr_prec_t wp = prec + 32;
  BigFloat pi_w = BigFloat::pi(wp);
  BigFloat r_w = round_to(r, wp);
  if (!(r_w > BigFloat(wp)) || !(r_w < pi_w))
    throw std::invalid_argument("contour_mean: radius must lie in (0, pi)");
  BigFloat two_pi = ldexp2(pi_w, 1);
  BigFloat r2 = r_w * r_w;

  auto level = [&](unsigned long N) {
    BigFloat total(wp);
    BigFloat offset(wp);
    BigFloat prev_arg(wp);
    for (unsigned long j = 0; j < N; ++j) {
      BigFloat theta = two_pi * j / N;
      BigFloat x = r_w * cos(theta), y = r_w * sin(theta);
      BigFloat sre = sin(x) * cosh(y), sim = cos(x) * sinh(y);
      BigFloat wre = (sre * x + sim * y) / r2;
      BigFloat wim = (sim * x - sre * y) / r2;
      BigFloat logmod = ldexp2(log(wre * wre + wim * wim), -1);
      BigFloat arg_raw = atan2(wim, wre);
      BigFloat arg = arg_raw + offset;
      while (arg - prev_arg > pi_w) {
        offset -= two_pi;
        arg = arg_raw + offset;
      }
      while (prev_arg - arg > pi_w) {
        offset += two_pi;
        arg = arg_raw + offset;
      }
      prev_arg = arg;
      total += hypot(logmod, arg);
    }
    return two_pi * total / N;
  };

  unsigned long N = 256;
  BigFloat cur = level(N);
  for (;;) {
    N *= 2;
    BigFloat next = level(N);
    BigFloat diff = abs(next - cur);
    cur = next;
    BigFloat stop = ldexp2(abs(cur) + BigFloat::of_int(1, wp), -(prec + 2));
    if (diff <= stop) break;
    if (N >= (1ul << 16))
      throw std::runtime_error("contour_mean: trapezoid refinement did not settle");
  }
  return round_to(cur, prec);
}

}  // namespace sincpow
