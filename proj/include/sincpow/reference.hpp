#pragma once

#include <set>
#include <vector>

#include "rational.hpp"

namespace sincpow::reference {

// Expansion coefficients c_1..c_10 as printed in the source the library
// certifies against. Index 0 holds c_1.
inline const std::vector<Rational>& published_expansion_coefficients() {
  static const std::vector<Rational> c = {
      parse_rational("-3/20"),
      parse_rational("-13/1120"),
      parse_rational("27/3200"),
      parse_rational("52791/3942400"),
      parse_rational("482427/66560000"),
      parse_rational("-124996631/10035200000"),
      parse_rational("-5270328789/136478720000"),
      parse_rational("-7479063506161/268461670400000"),
      parse_rational("6921977624613/56518246400000"),
      parse_rational("2631854096507395099467/1028632084480000000"),
  };
  return c;
}

// Envelope constant of the order-4 error term, n^5 |relative error| <= this.
inline const Rational& envelope_constant() {
  static const Rational q = rational_from_decimal("7.26e-3");
  return q;
}
// The same bound appears once more with this tighter figure; recorded so the
// certification report can show both.
inline const Rational& envelope_constant_display() {
  static const Rational q = rational_from_decimal("7.25e-3");
  return q;
}

// n where the order-4 envelope is published as not applying.
inline const std::set<unsigned long>& envelope_exclusions() {
  static const std::set<unsigned long> s = {2, 4, 6, 8, 10};
  return s;
}

// |a_k| < 0.517 * 3^-k for the log(sin x / x) Taylor coefficients.
inline const Rational& coeff_bound_constant() {
  static const Rational q = rational_from_decimal("0.517");
  return q;
}

// |log(sin x / x) - partial sum through x^K| < 1.09 (x/3)^(K+2), K even.
inline const Rational& remainder_constant() {
  static const Rational q = rational_from_decimal("1.09");
  return q;
}

// Circle average used to derive the 0.517 bound, published to three decimals.
inline const Rational& contour_constant() {
  static const Rational q = rational_from_decimal("9.733");
  return q;
}
inline const Rational& contour_radius() {
  static const Rational q = Rational(3);
  return q;
}

// Error budget pieces for the direct computation at large n:
//   11104 n^-23/2                      (Taylor truncation)
//   1.59e-9 n^5 exp(-pi n / 12)        (upper limit extension)
//   e^-n/6 + 1.45 * 0.479^35 (35/n)^35/2 + 5.5e7 n^-11   (residual terms)
// with the residual sum below 1e-5 / n^5 once n >= 400.
inline const Rational& taylor_tail_constant() {
  static const Rational q = Rational(11104);
  return q;
}
inline const Rational& extension_tail_constant() {
  static const Rational q = rational_from_decimal("1.59e-9");
  return q;
}
inline const Rational& residual_poly_constant() {
  static const Rational q = rational_from_decimal("5.5e7");
  return q;
}
inline const Rational& residual_prefactor() {
  static const Rational q = rational_from_decimal("1.45");
  return q;
}
inline const Rational& residual_base() {
  static const Rational q = rational_from_decimal("0.479");
  return q;
}
inline constexpr int residual_power = 35;
inline const Rational& residual_envelope() {
  static const Rational q = rational_from_decimal("1e-5");
  return q;
}

}  // namespace sincpow::reference
