#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sincpow {

using Int = mpz_class;
using Rational = mpq_class;

// Canonical p/q. GMP's two-argument mpq constructor does not reduce, so all
// rationals in this library are built through here (or by arithmetic on
// already-canonical values, which GMP keeps reduced).
inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Int(num), Int(den));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "p/q", optional leading sign. Result is canonical.
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: bad rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("parse_rational: zero denominator: " + s);
  q.canonicalize();
  return q;
}

// Exact value of a decimal literal such as "7.26e-3" or "0.517". Used for
// constants that are written in base ten but must enter comparisons exactly.
inline Rational rational_from_decimal(const std::string& s) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_len = 0;
  bool seen_digit = false, seen_dot = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c >= '0' && c <= '9') {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  long expo = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    std::size_t used = 0;
    try {
      expo = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("rational_from_decimal: bad exponent: " + s);
    }
    pos += used;
  }
  if (!seen_digit || pos != s.size())
    throw std::invalid_argument("rational_from_decimal: bad literal: " + s);

  Int num;
  if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
    throw std::invalid_argument("rational_from_decimal: bad digits: " + s);
  if (neg) num = -num;
  long net = expo - frac_len;
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
  return net >= 0 ? make_rational(num * pow10, Int(1)) : make_rational(num, pow10);
}

inline Int binomial(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return Int(0);
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// Odd double factorial; (-1)!! = 1 by convention.
inline Int double_factorial(long m) {
  if (m == -1) return Int(1);
  if (m < 0 || m % 2 == 0)
    throw std::invalid_argument("double_factorial: argument must be odd and >= -1");
  Int f;
  mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  return f;
}

// F(1) = F(2) = 1.
inline Int fibonacci(long k) {
  if (k < 0) throw std::invalid_argument("fibonacci: negative index");
  Int f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int pow2(unsigned long e) { return pow_int(Int(2), e); }

inline Rational pow_rational(const Rational& q, unsigned long e) {
  return make_rational(pow_int(Int(q.get_num()), e), pow_int(Int(q.get_den()), e));
}

}  // namespace sincpow
