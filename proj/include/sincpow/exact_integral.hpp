#pragma once

#include <stdexcept>

#include "rational.hpp"

namespace sincpow {

// integral_0^inf (sin x / x)^n dx = r(n) * pi with r(n) rational.
struct ExactValue {
  unsigned long n;
  Rational r;
};

// Alternating-sum closed form:
//   r(n) = 1 / (2^n (n-1)!) * sum_{j=0}^{floor(n/2)} (-1)^j C(n,j) (n-2j)^(n-1).
// For even n the j = n/2 term vanishes since n >= 2 makes (n-2j)^(n-1) = 0;
// for n = 1 the single term is 1^0 = 1, so 0^0 never arises.
inline ExactValue exact_sinc_integral(unsigned long n) {
  if (n == 0) throw std::invalid_argument("exact_sinc_integral: n must be >= 1");
  Int sum(0);
  for (unsigned long j = 0; j <= n / 2; ++j) {
    if (n - 2 * j == 0) continue;
    Int term = binomial(static_cast<long>(n), static_cast<long>(j)) *
               pow_int(Int(n - 2 * j), n - 1);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  Rational r = make_rational(sum, pow2(n) * factorial(static_cast<long>(n - 1)));
  return ExactValue{n, r};
}

}  // namespace sincpow
