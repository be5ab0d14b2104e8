#pragma once

#include <stdexcept>
#include <vector>

#include "bigfloat.hpp"
#include "rational.hpp"

namespace sincpow {

// Truncated power series sum_{k=0}^{degree} c[k] x^k with exact rational
// coefficients. All operations truncate at the smaller operand degree.
struct PowerSeries {
  std::vector<Rational> c;  // size degree() + 1

  explicit PowerSeries(int degree = 0) : c(static_cast<std::size_t>(degree) + 1) {
    if (degree < 0) throw std::invalid_argument("PowerSeries: negative degree");
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rational& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return c[static_cast<std::size_t>(k)]; }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.degree(), b.degree()));
    for (int k = 0; k <= r.degree(); ++k) r[k] = a[k] + b[k];
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.degree(), b.degree()));
    for (int k = 0; k <= r.degree(); ++k) r[k] = a[k] - b[k];
    return r;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.degree(), b.degree()));
    for (int k = 0; k <= r.degree(); ++k)
      for (int i = std::max(0, k - b.degree()); i <= std::min(k, a.degree()); ++i)
        r[k] += a[i] * b[k - i];
    return r;
  }
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.c == b.c;
  }

  // Formal logarithm of a series with constant term 1:
  //   l_k = s_k - (1/k) sum_{j=1}^{k-1} j l_j s_{k-j}.
  PowerSeries log() const {
    if (c[0] != 1)
      throw std::domain_error("PowerSeries::log: constant term must be 1");
    PowerSeries l(degree());
    for (int k = 1; k <= degree(); ++k) {
      Rational acc = (*this)[k];
      for (int j = 1; j < k; ++j)
        acc -= make_rational(j, k) * l[j] * (*this)[k - j];
      l[k] = acc;
    }
    return l;
  }

  // Formal exponential of a series with constant term 0:
  //   g_0 = 1, g_k = (1/k) sum_{i=1}^{k} i e_i g_{k-i}.
  PowerSeries exp() const {
    if (c[0] != 0)
      throw std::domain_error("PowerSeries::exp: constant term must be 0");
    PowerSeries g(degree());
    g[0] = 1;
    for (int k = 1; k <= degree(); ++k) {
      Rational acc;
      for (int i = 1; i <= k; ++i)
        acc += Rational(i) * (*this)[i] * g[k - i];
      g[k] = acc / k;
    }
    return g;
  }

  // Horner evaluation at a floating point; coefficients are converted at the
  // precision of x.
  BigFloat eval(const BigFloat& x) const {
    BigFloat acc = BigFloat::from_rational(c.back(), x.prec());
    for (int k = degree() - 1; k >= 0; --k)
      acc = acc * x + BigFloat::from_rational((*this)[k], x.prec());
    return acc;
  }
};

// sin x / x = sum_{m>=0} (-1)^m x^(2m) / (2m+1)!.
inline PowerSeries sinc_series(int degree) {
  PowerSeries s(degree);
  for (int m = 0; 2 * m <= degree; ++m) {
    Rational t = make_rational(Int(1), factorial(2 * m + 1));
    s[2 * m] = (m % 2 == 0) ? t : -t;
  }
  return s;
}

// Maclaurin coefficients a_k of log(sin x / x), exact through degree D.
// Only even k carry mass; D must be even so no half-computed pair is exposed.
struct SeriesCoeffs {
  int degree_bound;
  std::vector<Rational> a;  // size degree_bound + 1

  const Rational& at(int k) const {
    if (k < 0 || k > degree_bound)
      throw std::out_of_range("SeriesCoeffs: index outside computed range");
    return a[static_cast<std::size_t>(k)];
  }
};

inline SeriesCoeffs series_log_sinc(int degree) {
  if (degree < 2 || degree % 2 != 0)
    throw std::invalid_argument("series_log_sinc: degree must be even and >= 2");
  PowerSeries l = sinc_series(degree).log();
  return SeriesCoeffs{degree, std::move(l.c)};
}

}  // namespace sincpow
